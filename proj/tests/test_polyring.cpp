#include <gtest/gtest.h>

#include <cstdint>
#include <limits>

#include "bruhat/perm.hpp"
#include "bruhat/polyring.hpp"

using namespace bruhat;

namespace {

IntPolynomial X(int i) {
    return IntPolynomial::variable(i);
}

IntPolynomial poly(const std::string& s) {
    return parse_polynomial(s);
}

} // namespace

TEST(Polyring, Arithmetic) {
    const IntPolynomial p = poly("3*x1^2*x2 - x3 + 7");
    EXPECT_EQ(p + IntPolynomial(), p);
    EXPECT_EQ(X(1) * X(2), poly("x1*x2"));
    EXPECT_EQ(pow(X(1) + X(2), 2), poly("x1^2 + 2*x1*x2 + x2^2"));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(scalar_mul(p, 0), IntPolynomial());
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(pow(X(1), 0), IntPolynomial::constant(1));
}

TEST(Polyring, ParseAndPrintRoundTrip) {
    for (const auto* s : {"x1^4*x2^3*x3", "2*x1*x2 - x3^2 + 5", "0", "-x1", "y1^2*z3 + y2"}) {
        const auto f = poly(s);
        EXPECT_EQ(poly(to_string(f)), f) << s;
    }
    EXPECT_THROW(poly("x1 +"), DomainError);
    EXPECT_THROW(poly("x0"), DomainError);
    EXPECT_THROW(poly("x1*y2"), DomainError);
    EXPECT_THROW(poly("x1 x2"), DomainError);
}

TEST(Polyring, CheckedArithmetic) {
    const Coeff big = std::numeric_limits<Coeff>::max();
    EXPECT_THROW(checked_add(big, 1), std::overflow_error);
    EXPECT_THROW(checked_mul(big / 2 + 1, 2), std::overflow_error);
    EXPECT_EQ(checked_mul(-3, 4), -12);
}

TEST(Polyring, DividedDifferences) {
    EXPECT_EQ(divided_difference(X(1), 1), IntPolynomial::constant(1));
    EXPECT_TRUE(divided_difference(X(1) * X(2) + X(1) + X(2), 1).is_zero());
    EXPECT_EQ(divided_difference(poly("x1^2*x2"), 1), poly("x1*x2"));
    EXPECT_EQ(divided_difference(poly("x1^3"), 1), poly("x1^2 + x1*x2 + x2^2"));
    // Leibniz rule: d(fg) = d(f) g + s(f) d(g).
    const auto f = poly("x1^2*x3 + 2*x2"), g = poly("x2^3 - x1*x2");
    for (int i = 1; i <= 2; ++i)
        EXPECT_EQ(divided_difference(f * g, i),
                  divided_difference(f, i) * g + swap_variables(f, i) * divided_difference(g, i));
    EXPECT_EQ(divided_difference_word(poly("x1^2*x2"), {1, 2}), divided_difference(divided_difference(poly("x1^2*x2"), 2), 1));
}

TEST(Polyring, Substitute) {
    const auto f = poly("x1^2*x2 + x3");
    EXPECT_EQ(substitute(f, {1, 2, 3}, Alphabet{}), f);
    const Alphabet yz{2};
    const auto r = substitute(poly("x1*x3"), {1, 3, 2}, yz);
    EXPECT_EQ(to_string(r), "y1*y2");
    EXPECT_TRUE(substitute(poly("x1*x3"), {1, 3, 0}, yz).is_zero());
    EXPECT_THROW(substitute(poly("x4"), {1, 2}, Alphabet{}), DomainError);
}

TEST(Polyring, PsiThreeMonomials) {
    const auto s = poly("x1^4*x2*x4*x5 + x1^3*x2^2*x4*x5 + x1^3*x2*x4^2*x5 + x1^4*x2*x3*x4 + x1^4*x2*x3*x5"
                        " + x1^4*x3*x4*x5 + x1^3*x2^2*x3*x4 + x1^3*x2^2*x3*x5 + x1^3*x2*x3^2*x4"
                        " + x1^3*x2*x3^2*x5 + x1^3*x2*x3*x4^2 + x1^3*x3^2*x4*x5 + x1^3*x3*x4^2*x5"
                        " + 2*x1^3*x2*x3*x4*x5");
    // x3 -> 0, x4 -> x3, x5 -> x4.
    EXPECT_EQ(substitute(s, {1, 2, 0, 3, 4}, Alphabet{}),
              poly("x1^4*x2*x3*x4 + x1^3*x2^2*x3*x4 + x1^3*x2*x3^2*x4"));
}

TEST(Polyring, MonomialOrder) {
    const auto f = poly("x2^3 + x1*x3 + x1*x2^5");
    EXPECT_EQ(f.lex_leading().exponents(), (std::vector<int>{1, 5}));
    EXPECT_EQ(f.sorted_terms().front().first.exponents(), (std::vector<int>{1, 5}));
}
