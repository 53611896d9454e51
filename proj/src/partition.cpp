#include "bruhat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bruhat/perm.hpp"

namespace bruhat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        for (int j = 1; j <= parts_[0]; ++j) {
            int count = 0;
            for (int p : parts_) count += p >= j;
            c.push_back(count);
        }
    }
    return Partition(c);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > parts_[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    out << ')';
    return out.str();
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    int position = 0;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || value < 0)
            throw DomainError("malformed partition token '" + token + "' at position " +
                              std::to_string(position));
        parts.push_back(value);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') {
            flush();
            ++position;
        } else {
            if (token.empty()) ++position;
            token += ch;
        }
    }
    flush();
    return Partition(parts);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

void box_rec(int rows, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = max_part; p >= 1; --p) {
        cur.push_back(p);
        box_rec(rows, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    box_rec(rows, cols, cur, out);
    return out;
}

Partition rectangle(int a, int b) {
    return Partition(std::vector<int>(b, a));
}

} // namespace bruhat
