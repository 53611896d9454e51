#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bruhat {

using Coeff = std::int64_t;

// Overflow-checked coefficient arithmetic; throws std::overflow_error.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

inline constexpr int kMaxVariables = 40;

// Exponent vector over at most kMaxVariables axes. Axis i holds the
// exponent of the (i+1)-th variable of the alphabet.
class Monomial {
public:
    Monomial() { e_.fill(0); }
    explicit Monomial(const std::vector<int>& exponents);

    int operator[](int axis) const { return e_[axis]; }
    void set(int axis, int value);
    int degree() const;
    // Number of axes up to the last nonzero exponent.
    int width() const;
    std::vector<int> exponents() const;

    Monomial operator*(const Monomial& other) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    // Lexicographic comparison with the first axis heaviest.
    bool lex_less(const Monomial& o) const { return e_ < o.e_; }

    std::size_t hash() const noexcept;

private:
    std::array<std::uint8_t, kMaxVariables> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Graded reverse-lexicographic comparison: true when a comes strictly
// before b in the descending order.
bool grevlex_greater(const Monomial& a, const Monomial& b);

// Single alphabet x1, x2, ... (split = 0) or y1..y_split followed by z1, z2, ...
struct Alphabet {
    int split = 0;
    bool two() const { return split > 0; }
    bool operator==(const Alphabet&) const = default;
    std::string variable_name(int axis) const;
};

class IntPolynomial {
public:
    using Terms = std::unordered_map<Monomial, Coeff, MonomialHash>;

    IntPolynomial() = default;
    explicit IntPolynomial(Alphabet alphabet) : alphabet_(alphabet) {}

    static IntPolynomial constant(Coeff c, Alphabet alphabet = {});
    static IntPolynomial monomial(const Monomial& m, Coeff c = 1, Alphabet alphabet = {});
    // The variable with 1-based index i of the alphabet's flattened axes.
    static IntPolynomial variable(int i, Alphabet alphabet = {});

    const Alphabet& alphabet() const { return alphabet_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Coeff coefficient(const Monomial& m) const;
    int degree() const;
    // Terms in graded reverse-lexicographic descending order.
    std::vector<std::pair<Monomial, Coeff>> sorted_terms() const;
    // Lexicographically greatest exponent vector; requires a nonzero polynomial.
    Monomial lex_leading() const;

    void add_term(const Monomial& m, Coeff c);
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    // Adds c * o in place.
    void add_scaled(const IntPolynomial& o, Coeff c);

    bool operator==(const IntPolynomial& o) const;

private:
    void check_alphabet(const IntPolynomial& o) const;

    Alphabet alphabet_;
    Terms terms_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial scalar_mul(const IntPolynomial& a, Coeff c);
IntPolynomial pow(const IntPolynomial& a, int e);

// (x_i - x_{i+1})^{-1}(f - s_i f), i is 1-based.
IntPolynomial divided_difference(const IntPolynomial& f, int i);
// Apply divided differences along a word, rightmost letter first.
IntPolynomial divided_difference_word(IntPolynomial f, const std::vector<int>& word);
// Exchange x_i and x_{i+1}.
IntPolynomial swap_variables(const IntPolynomial& f, int i);

// sigma[i-1] is the image of variable i: a 1-based target index or 0 for zero.
// Variables beyond sigma's size are unmapped and raise DomainError if present.
IntPolynomial substitute(const IntPolynomial& f, const std::vector<int>& sigma, Alphabet target);

std::string to_string(const IntPolynomial& f);
IntPolynomial parse_polynomial(const std::string& text);

} // namespace bruhat
