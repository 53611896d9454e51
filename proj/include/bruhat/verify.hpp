#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bruhat/partition.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/polyring.hpp"
#include "bruhat/tableaux.hpp"

namespace bruhat {

struct Failure {
    std::string inputs;
    std::string expected;
    std::string actual;
};

class VerificationReport {
public:
    VerificationReport(std::string check, std::string statement, std::string universe);

    // Stores the first few failures; every failure is counted.
    void expect(bool ok, const std::string& inputs, const std::string& expected, const std::string& actual);
    void expect_eq(Coeff expected, Coeff actual, const std::string& inputs);
    void merge(const VerificationReport& other);

    bool passed() const { return failure_count == 0; }
    std::string text() const;
    std::string json() const;

    std::string check;
    std::string statement;
    std::string universe;
    std::optional<std::uint64_t> seed;
    std::int64_t cases = 0;
    std::int64_t failure_count = 0;
    std::vector<Failure> failures;
    double seconds = 0;

    static constexpr std::size_t kStoredFailures = 10;
};

// Fixed-point recursion, interval embedding and the substitution x_p -> 0.
VerificationReport verify_theorem_A(int n);
// A_p through the c-relation equals A_p through the r-relation.
VerificationReport verify_index_sets(int n);
// Chain relations agree with products by e_m and h_m.
VerificationReport verify_pieri(int n);
// Shape-equivalent permutations: isomorphic intervals and equal coefficients.
VerificationReport verify_theorem_B(int samples, std::uint64_t seed);
// Disjoint products.
VerificationReport verify_theorem_C(int n);
// Cyclic shift.
VerificationReport verify_theorem_D(int n);
VerificationReport verify_symmetries(int n);
// Chain count equals the f^lambda-weighted coefficient sum; k = 0 means every k.
VerificationReport verify_prop_chains(int n, int k = 0);
VerificationReport verify_theorem_chains(const Permutation& u, const Permutation& w, const std::vector<int>& I);
VerificationReport verify_theorem_chains_random(int n, int samples, std::uint64_t seed);
// Direct substitution against structure constants with the shuffle pi.
VerificationReport verify_substitution(const Permutation& w, const std::vector<int>& P);
VerificationReport verify_substitution_all(int n, const std::vector<int>& P);
VerificationReport verify_skew_permutation(const Permutation& zeta, const SkewShape& theta);
// Recording-tableau chain counts. Every witness u <=_k w when n <= 5,
// canonical witnesses beyond that.
VerificationReport verify_skew_shape_prime(int n);
VerificationReport verify_hook_law(int n);
VerificationReport verify_product_dualities(int n);
VerificationReport verify_v_times_w(int n);
VerificationReport verify_basis_round_trip(int n);
VerificationReport verify_leading_code(int n);
VerificationReport verify_diagonal_word(int samples, std::uint64_t seed);
VerificationReport verify_hook_formula(int max_size);
VerificationReport verify_braid_relations(int samples, std::uint64_t seed);

struct CensusCounts {
    std::int64_t skew_partitions = 0;
    std::int64_t shape_equivalent = 0;
    std::int64_t skew_permutations = 0;
};

struct CensusSets {
    std::set<Permutation> skew_partitions;
    std::set<Permutation> shape_equivalent;
    std::set<Permutation> skew_permutations;
};

CensusSets skew_census_sets(int n);
CensusCounts skew_census(int n);
// Order-preservation test on up and down sets.
bool shape_equivalent_to_skew_partition(const Permutation& zeta);

// c^theta_nu for every nu of |theta|, in partitions_of order.
std::vector<Coeff> skew_lr_vector(const SkewShape& theta);
std::vector<Coeff> lr_values(const Permutation& zeta);
// Normalized skew shapes (no empty rows or columns) with the given row lengths.
std::vector<SkewShape> skew_shapes_with_rows(const Partition& rows);
std::optional<SkewShape> matching_skew_shape(const Permutation& zeta);
// Non-skew zeta in S_n with no skew shape carrying the same coefficients.
std::vector<Permutation> exceptional_permutations(int n);

} // namespace bruhat
