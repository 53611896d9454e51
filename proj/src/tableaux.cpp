#include "bruhat/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "bruhat/perm.hpp"
#include "bruhat/schubert.hpp"

namespace bruhat {

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw DomainError("inner shape " + inner_.str() + " not contained in " + outer_.str());
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < rows(); ++r)
        for (int c = inner_[r]; c < outer_[r]; ++c) out.emplace_back(r, c);
    return out;
}

bool SkewShape::contains_cell(int r, int c) const {
    return r >= 0 && r < rows() && c >= inner_[r] && c < outer_[r];
}

std::string SkewShape::str() const {
    auto list = [](const Partition& p) {
        std::string s;
        for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
        return s;
    };
    return inner_.empty() ? list(outer_) : list(outer_) + "/" + list(inner_);
}

SkewShape parse_skew_shape(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(text));
    return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows()) throw DomainError("row count does not match the shape");
    for (int r = 0; r < shape_.rows(); ++r)
        if (static_cast<int>(rows_[r].size()) != shape_.outer()[r] - shape_.inner()[r])
            throw DomainError("row " + std::to_string(r + 1) + " has the wrong length");
}

Tableau Tableau::straight(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Tableau(SkewShape(Partition(parts)), rows);
}

int Tableau::entry(int r, int c) const {
    return rows_[r][c - shape_.inner()[r]];
}

bool Tableau::is_semistandard() const {
    for (auto [r, c] : shape_.cells()) {
        if (shape_.contains_cell(r, c + 1) && entry(r, c) > entry(r, c + 1)) return false;
        if (shape_.contains_cell(r + 1, c) && entry(r, c) >= entry(r + 1, c)) return false;
    }
    return true;
}

bool Tableau::is_standard() const {
    std::vector<int> all;
    for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1) return false;
    for (auto [r, c] : shape_.cells())
        if (shape_.contains_cell(r, c + 1) && entry(r, c) >= entry(r, c + 1)) return false;
    return is_semistandard();
}

std::string Tableau::str() const {
    int width = 1;
    for (const auto& row : rows_)
        for (int x : row) width = std::max(width, static_cast<int>(std::to_string(x).size()));
    std::ostringstream out;
    for (int r = 0; r < shape_.rows(); ++r) {
        for (int c = 0; c < shape_.outer()[r]; ++c) {
            std::string cell = c < shape_.inner()[r] ? "." : std::to_string(entry(r, c));
            out << (c ? " " : "") << std::string(width - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

std::string Tableau::json() const {
    return nlohmann::json(rows_).dump();
}

namespace {

// Exact n! / prod(hooks) through prime exponents.
Coeff exact_ratio(const std::vector<int>& numer, const std::vector<int>& denom) {
    std::map<int, int> exps;
    auto factor = [&](int x, int sign) {
        for (int p = 2; p * p <= x; ++p)
            while (x % p == 0) {
                exps[p] += sign;
                x /= p;
            }
        if (x > 1) exps[x] += sign;
    };
    for (int x : numer) factor(x, 1);
    for (int x : denom) factor(x, -1);
    Coeff r = 1;
    for (auto [p, e] : exps) {
        if (e < 0) throw std::logic_error("hook formula produced a non-integer");
        for (int i = 0; i < e; ++i) r = checked_mul(r, p);
    }
    return r;
}

} // namespace

Coeff f_lambda(const Partition& lambda) {
    std::vector<int> numer(lambda.size()), hooks;
    std::iota(numer.begin(), numer.end(), 1);
    const Partition conj = lambda.conjugate();
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) hooks.push_back(lambda[r] - c + conj[c] - r - 1);
    return exact_ratio(numer, hooks);
}

Coeff young_chain_count(const Partition& lambda) {
    std::map<std::vector<int>, Coeff> memo;
    std::function<Coeff(const std::vector<int>&)> rec = [&](const std::vector<int>& p) -> Coeff {
        if (p.empty()) return 1;
        if (auto it = memo.find(p); it != memo.end()) return it->second;
        Coeff total = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
            auto q = p;
            if (--q[i] == 0) q.pop_back();
            total = checked_add(total, rec(q));
        }
        memo[p] = total;
        return total;
    };
    return rec(lambda.parts());
}

std::pair<Tableau, Tableau> schensted(const std::vector<int>& word) {
    std::vector<std::vector<int>> P, Q;
    for (std::size_t t = 0; t < word.size(); ++t) {
        int x = word[t];
        std::size_t r = 0;
        while (true) {
            if (r == P.size()) {
                P.push_back({x});
                Q.push_back({static_cast<int>(t) + 1});
                break;
            }
            auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
            if (it == P[r].end()) {
                P[r].push_back(x);
                Q[r].push_back(static_cast<int>(t) + 1);
                break;
            }
            std::swap(x, *it);
            ++r;
        }
    }
    return {Tableau::straight(P), Tableau::straight(Q)};
}

Tableau insertion_tableau(const std::vector<int>& word) {
    return schensted(word).first;
}

std::vector<int> diagonal_word(const Tableau& R) {
    std::vector<std::tuple<int, int, int>> keyed;
    for (auto [r, c] : R.shape().cells()) keyed.emplace_back(c - r, R.entry(r, c), r);
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (auto& [d, x, r] : keyed) out.push_back(x);
    return out;
}

std::vector<int> column_word(const Tableau& R) {
    std::vector<int> out;
    const int cols = R.shape().outer()[0];
    for (int c = 0; c < cols; ++c)
        for (int r = R.shape().rows() - 1; r >= 0; --r)
            if (R.shape().contains_cell(r, c)) out.push_back(R.entry(r, c));
    return out;
}

bool knuth_equivalent(const std::vector<int>& a, const std::vector<int>& b) {
    return insertion_tableau(a) == insertion_tableau(b);
}

namespace {

void fill_standard(const SkewShape& shape, std::vector<std::vector<int>>& grid, std::vector<int>& filled, int next,
                   const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (next > shape.size()) {
        emit(grid);
        return;
    }
    // Place `next` in an addable cell: the leftmost empty cell of a row whose
    // upper neighbour (if inside the shape) is already filled.
    for (int r = 0; r < shape.rows(); ++r) {
        const int c = shape.inner()[r] + filled[r];
        if (c >= shape.outer()[r]) continue;
        if (r > 0 && shape.contains_cell(r - 1, c) && shape.inner()[r - 1] + filled[r - 1] <= c) continue;
        grid[r].push_back(next);
        ++filled[r];
        fill_standard(shape, grid, filled, next + 1, emit);
        --filled[r];
        grid[r].pop_back();
    }
}

void for_each_standard(const SkewShape& shape, const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    std::vector<std::vector<int>> grid(shape.rows());
    std::vector<int> filled(shape.rows(), 0);
    fill_standard(shape, grid, filled, 1, emit);
}

} // namespace

std::vector<Tableau> standard_tableaux(const SkewShape& shape) {
    std::vector<Tableau> out;
    for_each_standard(shape, [&](const auto& grid) { out.emplace_back(shape, grid); });
    return out;
}

Coeff count_standard_tableaux(const SkewShape& shape) {
    Coeff n = 0;
    for_each_standard(shape, [&](const auto&) { ++n; });
    return n;
}

Tableau row_superstandard(const Partition& nu) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int r = 0; r < nu.length(); ++r) {
        rows.emplace_back();
        for (int c = 0; c < nu[r]; ++c) rows.back().push_back(next++);
    }
    return Tableau::straight(rows);
}

namespace {

struct LrcCache {
    std::mutex mutex;
    std::map<std::tuple<Partition, Partition, Partition>, Coeff> values;
};

LrcCache& lrc_cache() {
    static LrcCache c;
    return c;
}

} // namespace

Coeff lrc_classical(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu)) return 0;
    const auto key = std::make_tuple(mu, nu, lambda);
    {
        std::lock_guard lock(lrc_cache().mutex);
        if (auto it = lrc_cache().values.find(key); it != lrc_cache().values.end()) return it->second;
    }
    const int k = std::max(lambda.length(), 1);
    const Coeff c = schubert_coefficient(schur_poly(mu, k) * schur_poly(nu, k), grassmannian(lambda, k));
    std::lock_guard lock(lrc_cache().mutex);
    lrc_cache().values.emplace(key, c);
    return c;
}

Coeff lrc_ballot(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu)) return 0;
    const SkewShape shape(lambda, mu);
    const auto cells = shape.cells();
    const int rows = shape.rows();
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(lambda[r], 0);
    std::vector<int> remaining(nu.parts());
    Coeff count = 0;
    // Fill in reverse reading order (rows top to bottom, each right to left),
    // keeping the partial reading word a lattice word.
    std::vector<std::pair<int, int>> order;
    for (int r = 0; r < rows; ++r)
        for (int c = lambda[r] - 1; c >= mu[r]; --c) order.emplace_back(r, c);
    std::vector<int> used(nu.length() + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
            ++count;
            return;
        }
        auto [r, c] = order[i];
        for (int x = 1; x <= nu.length(); ++x) {
            if (used[x] >= nu[x - 1]) continue;
            if (x > 1 && used[x] + 1 > used[x - 1]) continue;
            if (c + 1 < lambda[r] && grid[r][c + 1] < x) continue;
            if (r > 0 && c < lambda[r - 1] && c >= mu[r - 1] && grid[r - 1][c] >= x) continue;
            grid[r][c] = x;
            ++used[x];
            rec(i + 1);
            --used[x];
            grid[r][c] = 0;
        }
    };
    (void)cells;
    rec(0);
    return count;
}

Coeff skew_lrc(const SkewShape& shape, const Partition& nu, const Tableau& T) {
    if (shape.size() != nu.size()) return 0;
    Coeff n = 0;
    for_each_standard(shape, [&](const auto& grid) {
        if (insertion_tableau(column_word(Tableau(shape, grid))) == T) ++n;
    });
    return n;
}

Coeff skew_lrc(const SkewShape& shape, const Partition& nu) {
    return skew_lrc(shape, nu, row_superstandard(nu));
}

std::vector<Partition> horizontal_strips(const Partition& mu, int m, int row_bound) {
    if (m < 0) throw DomainError("strip length must be non-negative");
    std::vector<Partition> out;
    const int rows = std::min(mu.length() + 1, row_bound);
    if (mu.length() > row_bound) return out;
    std::vector<int> lam(rows, 0);
    std::function<void(int, int)> rec = [&](int r, int left) {
        if (r == rows) {
            if (left == 0) out.emplace_back(lam);
            return;
        }
        const int lo = mu[r];
        const int hi = r == 0 ? mu[0] + left : std::min(mu[r - 1], mu[r] + left);
        for (int x = hi; x >= lo; --x) {
            lam[r] = x;
            rec(r + 1, left - (x - lo));
        }
    };
    rec(0, m);
    return out;
}

} // namespace bruhat
