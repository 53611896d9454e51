#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/partition.hpp"

namespace bruhat {

// Raised for inputs outside the domain of an operation (malformed text,
// violated preconditions). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite-support bijection of the positive integers, stored in trimmed
// one-line notation: the last stored value is never a fixed point.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity() { return {}; }
    static Permutation transposition(int a, int b);
    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);

    int operator()(int i) const {
        return i >= 1 && i <= size() ? images_[i - 1] : i;
    }
    // Degree of the trimmed one-line form; 0 for the identity.
    int size() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }
    std::vector<int> one_line(int n) const;
    bool is_identity() const { return images_.empty(); }

    Permutation inverse() const;
    // Right multiplication by the transposition of positions a and b.
    Permutation swap_positions(int a, int b) const;

    std::vector<std::vector<int>> cycles() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

// Parses "413652", "[4,1,3,6,5,2]" or cycle notation "(1 5 3)(2 4)".
Permutation parse_permutation(const std::string& text);
// Compact one-line form when the degree is at most 9, bracketed otherwise.
std::string to_string(const Permutation& w);
// One-line form padded to n entries.
std::string to_string(const Permutation& w, int n);
std::string cycle_string(const Permutation& w);

int length(const Permutation& w);
std::vector<int> lehmer_code(const Permutation& w);
Permutation decode_lehmer(const std::vector<int>& code);
Permutation decode_lehmer(const std::vector<int>& code, int n);
int last_descent(const Permutation& w);
std::vector<int> descents(const Permutation& w);

Permutation w0(int n);
Permutation bar(const Permutation& w, int n);
// u x v: u on [n], v shifted onto n+1, n+2, ...
Permutation cross(const Permutation& u, const Permutation& v, int n);

Permutation epsilon_pq(const Permutation& w, int p, int q);
Permutation delete_p(const Permutation& x, int p);
Permutation phi_P(const Permutation& xi, const std::vector<int>& P);
// eps_{P,Q}(v, w) with P, Q n-subsets of [n + m], v in S_n, w in S_m.
Permutation epsilon_PQ(const Permutation& v, const Permutation& w,
                       const std::vector<int>& P, const std::vector<int>& Q, int total);

struct CycleStats {
    std::vector<int> up;
    std::vector<int> down;
    std::vector<int> support;
    int rank_abs = 0;
};

CycleStats cycle_stats(const Permutation& zeta);
int rank_abs(const Permutation& zeta);
std::vector<int> support(const Permutation& zeta);

Permutation shape_canonical(const Permutation& zeta);
bool shape_equivalent(const Permutation& zeta, const Permutation& eta);

// Conjugation by the n-cycle (1 2 ... n).
Permutation cyclic_shift(const Permutation& zeta, int n);

bool is_disjoint(const Permutation& zeta, const Permutation& eta);
// True when some chord of zeta crosses some chord of eta on the convex n-gon.
bool crossing_oracle(const Permutation& zeta, const Permutation& eta);

Permutation grassmannian(const Partition& lambda, int k);
std::optional<std::pair<Partition, int>> decode_grassmannian(const Permutation& w);

std::vector<Permutation> all_permutations(int n);

} // namespace bruhat

template <>
struct std::hash<bruhat::Permutation> {
    std::size_t operator()(const bruhat::Permutation& p) const noexcept {
        return bruhat::PermutationHash{}(p);
    }
};
