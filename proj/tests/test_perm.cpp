#include <gtest/gtest.h>

#include <set>

#include "bruhat/partition.hpp"
#include "bruhat/perm.hpp"

using namespace bruhat;

namespace {

Permutation P(const std::string& s) {
    return parse_permutation(s);
}

int brute_inversions(const Permutation& w, int n) {
    int c = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) c += w(i) > w(j);
    return c;
}

} // namespace

TEST(Perm, ParsingFormats) {
    EXPECT_EQ(P("413652"), P("[4,1,3,6,5,2]"));
    EXPECT_EQ(P("(1 5 3)(2 4 6)"), P("(153)(246)"));
    EXPECT_EQ(P("12345"), Permutation());
    EXPECT_EQ(P("1"), Permutation::identity());
    EXPECT_EQ(to_string(P("2134")), "21");
    EXPECT_EQ(to_string(P("2143"), 6), "214356");
    EXPECT_EQ(to_string(P("21"), 4), "2134");
    EXPECT_THROW(P("425635"), DomainError);
    EXPECT_THROW(P("4a2"), DomainError);
    EXPECT_THROW(P("(1 2"), DomainError);
}

TEST(Perm, CompositionIsRightToLeft) {
    const Permutation a = P("231"), b = P("213");
    const Permutation ab = a * b;
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(ab(i), a(b(i)));
    EXPECT_EQ(a * a.inverse(), Permutation());
}

TEST(Perm, Length) {
    EXPECT_EQ(length(Permutation()), 0);
    EXPECT_EQ(length(P("4321")), 6);
    EXPECT_EQ(length(P("2413")), brute_inversions(P("2413"), 4));
    EXPECT_EQ(length(P("2413")), 3);
    for (const auto& w : all_permutations(5)) EXPECT_EQ(length(w), brute_inversions(w, 5));
}

TEST(Perm, LehmerCode) {
    EXPECT_TRUE(lehmer_code(Permutation()).empty());
    EXPECT_EQ(lehmer_code(P("4321")), (std::vector<int>{3, 2, 1}));
    const Permutation w = P("413652");
    std::vector<int> brute;
    for (int i = 1; i <= 6; ++i) {
        int c = 0;
        for (int j = i + 1; j <= 6; ++j) c += w(j) < w(i);
        brute.push_back(c);
    }
    while (!brute.empty() && brute.back() == 0) brute.pop_back();
    EXPECT_EQ(lehmer_code(w), brute);
    EXPECT_EQ(decode_lehmer(lehmer_code(w)), w);
    for (const auto& x : all_permutations(5)) EXPECT_EQ(decode_lehmer(lehmer_code(x)), x);
}

TEST(Perm, EpsilonAndDelete) {
    EXPECT_EQ(epsilon_pq(P("23154"), 3, 3), P("243165"));
    EXPECT_EQ(epsilon_pq(Permutation(), 1, 1), Permutation());
    const Permutation e21 = epsilon_pq(P("213"), 2, 1);
    EXPECT_EQ(e21(2), 1);
    EXPECT_EQ(delete_p(e21, 2), P("213"));
    EXPECT_EQ(delete_p(P("264351"), 3), P("25341"));
    EXPECT_EQ(delete_p(Permutation(), 2), Permutation());
    EXPECT_EQ(delete_p(epsilon_pq(P("31425"), 5, 2), 5), P("31425"));
    for (const auto& x : all_permutations(4))
        for (int p = 1; p <= 5; ++p)
            for (int q = 1; q <= 5; ++q) {
                const Permutation y = epsilon_pq(x, p, q);
                EXPECT_EQ(y(p), q);
                EXPECT_EQ(delete_p(y, p), x);
            }
}

TEST(Perm, PhiP) {
    EXPECT_EQ(phi_P(P("(24)(153)"), {1, 3, 4, 5, 7}), P("(35)(174)"));
    EXPECT_EQ(phi_P(Permutation(), {2, 5}), Permutation());
    const Permutation w = P("3142");
    const Permutation shifted = phi_P(w, {4, 5, 6, 7});
    EXPECT_EQ(shifted, cross(Permutation(), w, 3));
    EXPECT_EQ(length(shifted), length(w));
}

TEST(Perm, EpsilonPQ) {
    const Permutation u = P("231"), x = P("21");
    EXPECT_EQ(epsilon_PQ(u, x, {1, 2, 3}, {1, 2, 3}, 5), cross(u, x, 3));
    for (const auto& w : all_permutations(4)) {
        EXPECT_EQ(epsilon_PQ(w, Permutation(), {1, 2, 4, 5}, {1, 2, 4, 5}, 5), epsilon_pq(w, 3, 3));
    }
}

TEST(Perm, CycleStats) {
    const auto e = cycle_stats(Permutation());
    EXPECT_TRUE(e.up.empty() && e.down.empty());
    EXPECT_EQ(e.rank_abs, 0);
    EXPECT_EQ(rank_abs(Permutation::transposition(3, 4)), 1);
    // |zeta| = l(zeta u) - l(u) for u = e.
    EXPECT_EQ(rank_abs(P("(1243)")), length(P("(1243)")));
    EXPECT_EQ(rank_abs(P("(1243)")), 3);
    const auto st = cycle_stats(P("(153)(246)"));
    EXPECT_EQ(st.up.size(), 3u);
    EXPECT_EQ(st.down.size(), 3u);
    EXPECT_EQ(st.rank_abs, 6);
}

TEST(Perm, ShapeEquivalence) {
    EXPECT_TRUE(shape_equivalent(P("(1978)"), P("(1423)")));
    EXPECT_TRUE(shape_equivalent(P("(26354)"), P("(15243)")));
    EXPECT_TRUE(shape_equivalent(P("(153)"), P("(153)")));
    EXPECT_FALSE(shape_equivalent(P("(1423)"), P("(1243)")));
    EXPECT_EQ(shape_canonical(P("(35)(174)")), shape_canonical(P("(24)(153)")));
}

TEST(Perm, CyclicShift) {
    EXPECT_EQ(cyclic_shift(P("(1243)"), 4), P("(1423)"));
    EXPECT_EQ(cyclic_shift(P("(1423)"), 4), P("(1342)"));
    EXPECT_EQ(cyclic_shift(P("(15243)"), 5), P("(13542)"));
    EXPECT_EQ(cyclic_shift(P("(13425)"), 5), P("(12453)"));
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(cyclic_shift(Permutation(), n), Permutation());
    const Permutation c = P("(123456)");
    for (const auto& z : all_permutations(6)) {
        EXPECT_EQ(cyclic_shift(z, 6), c * z * c.inverse());
    }
}

TEST(Perm, Disjointness) {
    EXPECT_TRUE(is_disjoint(P("(1782)"), P("(345)")));
    EXPECT_FALSE(is_disjoint(P("(13)"), P("(24)")));
    EXPECT_TRUE(is_disjoint(P("(1978)"), P("(26354)")));
    EXPECT_TRUE(is_disjoint(P("(153)"), Permutation()));
    // |zeta eta| = |zeta| + |eta| exactly for disjoint pairs with disjoint support.
    const auto all = all_permutations(5);
    for (const auto& a : all)
        for (const auto& b : all) {
            const auto sa = support(a), sb = support(b);
            bool overlap = false;
            for (int x : sa)
                for (int y : sb) overlap |= x == y;
            if (overlap || a.is_identity() || b.is_identity()) continue;
            EXPECT_EQ(is_disjoint(a, b), rank_abs(a * b) == rank_abs(a) + rank_abs(b)) << cycle_string(a) << cycle_string(b);
        }
}

TEST(Perm, Grassmannian) {
    EXPECT_EQ(grassmannian(Partition{1}, 2), P("13245"));
    EXPECT_EQ(grassmannian(Partition{2, 2}, 2), P("34125"));
    EXPECT_EQ(grassmannian(Partition{3, 2}, 2), P("35124"));
    EXPECT_EQ(grassmannian(Partition{}, 3), Permutation());
    EXPECT_EQ(P("(12453)"), grassmannian(Partition{2, 2, 1}, 3) * grassmannian(Partition{1}, 3).inverse());
    for (const auto& lam : partitions_in_box(3, 3)) {
        const Permutation v = grassmannian(lam, 3);
        EXPECT_EQ(length(v), lam.size());
        const auto d = descents(v);
        EXPECT_TRUE(d.empty() || (d.size() == 1 && d[0] == 3));
        const auto back = decode_grassmannian(v);
        if (!lam.empty()) {
            ASSERT_TRUE(back);
            EXPECT_EQ(back->first, lam);
        }
    }
}

TEST(Perm, Bar) {
    EXPECT_EQ(bar(Permutation(), 5), Permutation());
    EXPECT_EQ(bar(w0(4), 4), w0(4));
    EXPECT_EQ(bar(P("1342"), 4), w0(4) * P("1342") * w0(4));
    EXPECT_EQ(bar(P("1342"), 4), P("3124"));
}

TEST(Perm, AllPermutations) {
    EXPECT_EQ(all_permutations(0).size(), 1u);
    EXPECT_EQ(all_permutations(5).size(), 120u);
    const auto s = all_permutations(4);
    EXPECT_EQ(std::set<Permutation>(s.begin(), s.end()).size(), 24u);
}

TEST(Partition, Basics) {
    EXPECT_EQ(parse_partition("3,2,1").conjugate(), Partition({3, 2, 1}));
    EXPECT_EQ(Partition({4, 1}).conjugate(), Partition({2, 1, 1, 1}));
    EXPECT_EQ(partitions_of(6).size(), 11u);
    EXPECT_EQ(partitions_in_box(2, 3).size(), 10u);
    EXPECT_TRUE(Partition({3, 3}).contains(Partition({2, 1})));
    EXPECT_FALSE(Partition({3}).contains(Partition({1, 1})));
    EXPECT_THROW(parse_partition("1,2"), DomainError);
    EXPECT_EQ(rectangle(3, 2), Partition({3, 3}));
}
