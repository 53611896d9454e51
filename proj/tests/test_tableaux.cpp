#include <gtest/gtest.h>

#include <set>

#include "bruhat/partition.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/tableaux.hpp"

using namespace bruhat;

namespace {

std::vector<int> digits(const std::string& s) {
    std::vector<int> out;
    for (char c : s) out.push_back(c - '0');
    return out;
}

// Every partition obtained from mu by adding m boxes, no two in a column.
std::set<Partition> brute_strips(const Partition& mu, int m) {
    std::set<Partition> out;
    for (const auto& lam : partitions_of(mu.size() + m)) {
        if (!lam.contains(mu)) continue;
        bool ok = true;
        for (int i = 1; i < lam.length(); ++i) ok &= lam[i] <= mu[i - 1];
        if (ok) out.insert(lam);
    }
    return out;
}

} // namespace

TEST(Tableaux, SkewShapes) {
    const SkewShape s = parse_skew_shape("5,4,2,1/3,2");
    EXPECT_EQ(s.size(), 7);
    EXPECT_EQ(s.str(), "5,4,2,1/3,2");
    EXPECT_TRUE(s.contains_cell(0, 3));
    EXPECT_FALSE(s.contains_cell(0, 2));
    EXPECT_EQ(s.cells().size(), 7u);
    EXPECT_THROW(SkewShape(Partition{2}, Partition{3}), DomainError);
    EXPECT_THROW(parse_skew_shape("2,1/x"), DomainError);
}

TEST(Tableaux, HookFormula) {
    EXPECT_EQ(f_lambda(Partition{3, 3}), 5);
    EXPECT_EQ(f_lambda(Partition{3, 2, 1}), 16);
    EXPECT_EQ(f_lambda(Partition{2, 2, 2}), 5);
    EXPECT_EQ(f_lambda(Partition{6}), 1);
    EXPECT_EQ(f_lambda(Partition{2, 1}), 2);
    EXPECT_EQ(standard_tableaux(SkewShape(Partition{2, 1})).size(), 2u);
    for (int m = 0; m <= 7; ++m)
        for (const auto& lam : partitions_of(m)) {
            EXPECT_EQ(f_lambda(lam), young_chain_count(lam)) << lam.str();
            EXPECT_EQ(f_lambda(lam), count_standard_tableaux(SkewShape(lam))) << lam.str();
        }
}

TEST(Tableaux, Schensted) {
    const auto [p0, q0] = schensted({});
    EXPECT_TRUE(p0.rows().empty() && q0.rows().empty());
    const auto [p1, q1] = schensted({1, 2, 3, 4});
    EXPECT_EQ(p1.rows(), (std::vector<std::vector<int>>{{1, 2, 3, 4}}));
    EXPECT_EQ(q1.rows(), (std::vector<std::vector<int>>{{1, 2, 3, 4}}));
    EXPECT_EQ(schensted(digits("2645")).second, schensted(digits("4526")).second);
    EXPECT_NE(schensted(digits("2456")).second, schensted(digits("2645")).second);
    const auto [p, q] = schensted(digits("31524"));
    EXPECT_TRUE(p.is_standard());
    EXPECT_TRUE(q.is_standard());
    EXPECT_EQ(p.shape(), q.shape());
}

TEST(Tableaux, Words) {
    const Tableau R = Tableau::straight({{1, 2, 2, 5, 8}, {3, 4, 6, 6}, {5, 7, 8}, {7, 8, 9}});
    EXPECT_TRUE(R.is_semistandard());
    EXPECT_EQ(diagonal_word(R), digits("758379148262658"));
    EXPECT_TRUE(knuth_equivalent(diagonal_word(R), column_word(R)));
    EXPECT_EQ(diagonal_word(Tableau::straight({{4}})), (std::vector<int>{4}));
    EXPECT_EQ(diagonal_word(Tableau::straight({{1, 3, 3, 7}})), (std::vector<int>{1, 3, 3, 7}));
    EXPECT_TRUE(knuth_equivalent(digits("213"), digits("213")));
    // 213 -> 231 is an elementary Knuth move.
    EXPECT_TRUE(knuth_equivalent(digits("213"), digits("231")));
    EXPECT_FALSE(knuth_equivalent(digits("213"), digits("132")));
    EXPECT_FALSE(knuth_equivalent(digits("12"), digits("123")));
}

TEST(Tableaux, LittlewoodRichardson) {
    EXPECT_EQ(lrc_classical(Partition{}, Partition{3, 1}, Partition{3, 1}), 1);
    EXPECT_EQ(lrc_classical(Partition{1}, Partition{1, 1}, Partition{2, 1}), 1);
    EXPECT_EQ(lrc_ballot(Partition{1}, Partition{1, 1}, Partition{2, 1}), 1);
    EXPECT_EQ(lrc_ballot(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}), 2);
    for (int a = 0; a <= 3; ++a)
        for (const auto& mu : partitions_of(a))
            for (int b = 0; b <= 3; ++b)
                for (const auto& nu : partitions_of(b))
                    for (const auto& lam : partitions_of(a + b)) {
                        EXPECT_EQ(lrc_classical(mu, nu, lam), lrc_ballot(mu, nu, lam));
                        EXPECT_EQ(lrc_ballot(mu, nu, lam), lrc_ballot(nu, mu, lam));
                    }
    // Pieri.
    for (const auto& mu : partitions_of(3))
        for (int m = 1; m <= 3; ++m) {
            const auto strips = brute_strips(mu, m);
            for (const auto& lam : partitions_of(3 + m))
                EXPECT_EQ(lrc_classical(mu, Partition{m}, lam), strips.count(lam) ? 1 : 0);
        }
}

TEST(Tableaux, SkewCoefficients) {
    const SkewShape theta(Partition{3, 2, 1}, Partition{2, 1});
    for (const auto& nu : partitions_of(3))
        EXPECT_EQ(skew_lrc(theta, nu), lrc_ballot(Partition{2, 1}, nu, Partition{3, 2, 1})) << nu.str();
    EXPECT_EQ(row_superstandard(Partition{3, 1}).rows(), (std::vector<std::vector<int>>{{1, 2, 3}, {4}}));
}

TEST(Tableaux, HorizontalStrips) {
    EXPECT_EQ(horizontal_strips(Partition{2, 1}, 0, 5), (std::vector<Partition>{Partition{2, 1}}));
    EXPECT_EQ(horizontal_strips(Partition{}, 3, 1), (std::vector<Partition>{Partition{3}}));
    const auto got = horizontal_strips(Partition{2, 1}, 2, 5);
    EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), brute_strips(Partition{2, 1}, 2));
    for (const auto& lam : got) EXPECT_LE(lam.length(), 5);
}
