#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/perm.hpp"
#include "bruhat/polyring.hpp"

namespace bruhat {

bool bruhat_leq(const Permutation& u, const Permutation& w);
// u -> u(a, b) raises length by exactly one.
bool is_cover_swap(const Permutation& u, int a, int b);
std::vector<Permutation> bruhat_covers_up(const Permutation& u, int n);

bool k_bruhat_leq(const Permutation& u, const Permutation& w, int k);
// Covers u(a, b) with a <= k < b <= n, each labeled by u(b).
std::vector<std::pair<Permutation, int>> k_covers_up(const Permutation& u, int k, int n);

enum class ChainVariant {
    MinUmin,   // the basic algorithm: u(a) minimal, then u(b) maximal
    MaxWmax,   // conjugated by left multiplication with w_0
    Reverse,   // conjugated by right multiplication with w_0, k -> n - k
    Conjugate, // conjugated by w_0 on both sides, k -> n - k
};

ChainVariant parse_chain_variant(const std::string& name);
std::string to_string(ChainVariant v);

// Saturated k-Bruhat chain from w down to u.
std::vector<Permutation> chain_algorithm(const Permutation& u, const Permutation& w, int k,
                                         ChainVariant variant = ChainVariant::MinUmin);
// zeta, zeta_1, ..., e; depends only on zeta.
std::vector<Permutation> chain_algorithm_zeta(const Permutation& zeta);

struct Cover {
    Permutation lower;
    Permutation upper;
    int label = 0;
};

struct LabeledInterval {
    Permutation bottom;
    Permutation top;
    // Sorted by rank, then one-line notation.
    std::vector<Permutation> vertices;
    std::vector<Cover> covers;
    std::map<Permutation, int> rank;

    int index_of(const Permutation& v) const;
    int height() const { return rank.at(top); }
};

LabeledInterval interval_k(const Permutation& u, const Permutation& w, int k);

bool preceq(const Permutation& eta, const Permutation& zeta);
// Existential definition: some u in S_n and k with u <=_k eta u <=_k zeta u.
bool preceq_by_definition(const Permutation& eta, const Permutation& zeta, int n);
LabeledInterval interval_preceq(const Permutation& zeta);

Coeff count_maximal_chains(const LabeledInterval& interval);
std::vector<std::vector<Permutation>> maximal_chains(const LabeledInterval& interval);
// Label words of the maximal chains, read bottom to top, sorted.
std::vector<std::vector<int>> chain_words(const LabeledInterval& interval);

// Same vertex count, and phi maps vertices onto vertices and covers onto
// covers (with equal labels unless compare_labels is false).
bool is_labeled_isomorphism(const LabeledInterval& a, const LabeledInterval& b,
                            const std::function<Permutation(const Permutation&)>& phi,
                            bool compare_labels = true);

// I is the set of generator indices excluded from the parabolic subgroup P.
bool p_bruhat_cover(const Permutation& u, const Permutation& w, const std::vector<int>& I);
Coeff coloured_chain_count(const Permutation& u, const Permutation& w, const std::vector<int>& I);

struct FacetIntersection {
    int first = 0;
    int second = 0;
    int shared = 0;
    int codim = 0;
};

struct OrderComplex {
    std::vector<std::vector<Permutation>> facets;
    std::vector<FacetIntersection> intersections;
};

OrderComplex order_complex(const LabeledInterval& interval,
                           const std::function<bool(const Permutation&)>& keep);
// Proper part: bottom and top removed.
OrderComplex order_complex_proper(const LabeledInterval& interval);

std::string dot_export(const LabeledInterval& interval);
std::string interval_json(const LabeledInterval& interval);

} // namespace bruhat
