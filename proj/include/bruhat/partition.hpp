#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bruhat {

// Weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

Partition parse_partition(const std::string& text);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_in_box(int rows, int cols);

// Rectangle a^b: b rows of length a.
Partition rectangle(int a, int b);

} // namespace bruhat
