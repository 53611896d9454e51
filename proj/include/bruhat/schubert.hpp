#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/partition.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/polyring.hpp"

namespace bruhat {

// Orders permutations by length, then by one-line notation.
struct LengthLexLess {
    bool operator()(const Permutation& a, const Permutation& b) const;
};

class SchubertExpansion {
public:
    using Map = std::map<Permutation, Coeff, LengthLexLess>;

    void add(const Permutation& w, Coeff c);
    Coeff operator[](const Permutation& w) const;
    const Map& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }
    std::set<Permutation> support() const;
    bool operator==(const SchubertExpansion& o) const { return coeffs_ == o.coeffs_; }

    // One "perm: coeff" line per term.
    std::string str() const;
    IntPolynomial reconstruct() const;

private:
    Map coeffs_;
};

class TwoAlphabetExpansion {
public:
    using Key = std::pair<Permutation, Permutation>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using Map = std::map<Key, Coeff, KeyLess>;

    void add(const Permutation& u, const Permutation& v, Coeff c);
    Coeff at(const Permutation& u, const Permutation& v) const;
    const Map& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool operator==(const TwoAlphabetExpansion& o) const { return coeffs_ == o.coeffs_; }
    // One "u | v: coeff" line per term.
    std::string str() const;

private:
    Map coeffs_;
};

// Memoized; safe for concurrent callers.
const IntPolynomial& schubert_poly(const Permutation& w);

enum class WordStrategy { SmallestLeftDescent, LargestLeftDescent };
// Uncached computation along an explicit reduced word of w^{-1} w_0.
IntPolynomial schubert_poly_by_word(const Permutation& w, WordStrategy strategy);

// Reduced word a_1 ... a_r with w = s_{a_1} ... s_{a_r}.
std::vector<int> reduced_word(const Permutation& w);

// Sum over semistandard tableaux of shape lambda with entries in [k].
IntPolynomial schur_poly(const Partition& lambda, int k);
IntPolynomial elementary_poly(int m, int k);
IntPolynomial complete_poly(int m, int k);

SchubertExpansion expand_in_schubert_basis(const IntPolynomial& f);

Coeff structure_constant(const Permutation& u, const Permutation& v, const Permutation& w);
SchubertExpansion product_expansion(const Permutation& u, const Permutation& v);
// Coefficient of S_w in a polynomial homogeneous of degree l(w).
Coeff schubert_coefficient(const IntPolynomial& f, const Permutation& w);

SchubertExpansion monk_multiply(const Permutation& u, int k);

std::set<Permutation> pieri_targets_c(const Permutation& u, int k, int m);
std::set<Permutation> pieri_targets_r(const Permutation& u, int k, int m);

std::set<Permutation> a_p_set(const Permutation& x, int p);
// A_p(x) through the r-relation with eps_{p,n+1}, n the ambient degree of x.
std::set<Permutation> a_p_set_via_r(const Permutation& x, int p, int n);

IntPolynomial psi_p_polynomial(const Permutation& w, int p);
SchubertExpansion psi_p(const Permutation& w, int p);

IntPolynomial psi_P_polynomial(const Permutation& w, const std::vector<int>& P, int bound);
TwoAlphabetExpansion expand_two_alphabet(const IntPolynomial& f);
TwoAlphabetExpansion psi_P_expand(const Permutation& w, const std::vector<int>& P, int bound);

Permutation i_p_element(const std::vector<int>& P, int l, int d, const std::vector<int>& R);

Permutation canonical_u_for(const Permutation& zeta, int k);
Coeff lr_coeff_perm(const Permutation& zeta, const Partition& lambda);
// Same value, read off the polynomial product S_u * S_lambda.
Coeff lr_coeff_perm_by_product(const Permutation& zeta, const Partition& lambda);
// c^zeta_lambda for every lambda of |zeta|, in partitions_of order.
std::vector<std::pair<Partition, Coeff>> lr_vector(const Permutation& zeta);

bool is_ballot(const std::vector<int>& A);
SchubertExpansion psi_ballot(const Permutation& w, const std::vector<int>& A);

} // namespace bruhat
