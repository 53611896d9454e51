#include "bruhat/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "bruhat/perm.hpp"

namespace bruhat {

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient addition");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient multiplication");
    return r;
}

Monomial::Monomial(const std::vector<int>& exponents) {
    e_.fill(0);
    if (exponents.size() > kMaxVariables) {
        for (std::size_t i = kMaxVariables; i < exponents.size(); ++i)
            if (exponents[i] != 0) throw DomainError("too many variables in monomial");
    }
    for (std::size_t i = 0; i < exponents.size() && i < kMaxVariables; ++i) set(static_cast<int>(i), exponents[i]);
}

void Monomial::set(int axis, int value) {
    if (axis < 0 || axis >= kMaxVariables) throw DomainError("variable index out of range");
    if (value < 0 || value > 255) throw std::overflow_error("exponent out of range");
    e_[axis] = static_cast<std::uint8_t>(value);
}

int Monomial::degree() const {
    int d = 0;
    for (auto x : e_) d += x;
    return d;
}

int Monomial::width() const {
    for (int i = kMaxVariables; i > 0; --i)
        if (e_[i - 1]) return i;
    return 0;
}

std::vector<int> Monomial::exponents() const {
    return std::vector<int>(e_.begin(), e_.begin() + width());
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) {
        int s = e_[i] + other.e_[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        r.e_[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : e_) {
        h ^= x;
        h *= 0x100000001b3ull;
    }
    return h;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = kMaxVariables - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::string Alphabet::variable_name(int axis) const {
    if (!two()) return "x" + std::to_string(axis + 1);
    if (axis < split) return "y" + std::to_string(axis + 1);
    return "z" + std::to_string(axis - split + 1);
}

IntPolynomial IntPolynomial::constant(Coeff c, Alphabet alphabet) {
    IntPolynomial p(alphabet);
    p.add_term(Monomial(), c);
    return p;
}

IntPolynomial IntPolynomial::monomial(const Monomial& m, Coeff c, Alphabet alphabet) {
    IntPolynomial p(alphabet);
    p.add_term(m, c);
    return p;
}

IntPolynomial IntPolynomial::variable(int i, Alphabet alphabet) {
    Monomial m;
    m.set(i - 1, 1);
    return monomial(m, 1, alphabet);
}

Coeff IntPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

int IntPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::vector<std::pair<Monomial, Coeff>> IntPolynomial::sorted_terms() const {
    std::vector<std::pair<Monomial, Coeff>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first); });
    return v;
}

Monomial IntPolynomial::lex_leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || best->lex_less(m)) best = &m;
    return *best;
}

void IntPolynomial::add_term(const Monomial& m, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void IntPolynomial::check_alphabet(const IntPolynomial& o) const {
    if (!(alphabet_ == o.alphabet_)) throw DomainError("alphabet mismatch");
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    add_scaled(o, 1);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    add_scaled(o, -1);
    return *this;
}

void IntPolynomial::add_scaled(const IntPolynomial& o, Coeff c) {
    check_alphabet(o);
    if (c == 0) return;
    for (const auto& [m, d] : o.terms_) add_term(m, checked_mul(c, d));
}

bool IntPolynomial::operator==(const IntPolynomial& o) const {
    return alphabet_ == o.alphabet_ && terms_ == o.terms_;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    r += b;
    return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    r -= b;
    return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (!(a.alphabet() == b.alphabet())) throw DomainError("alphabet mismatch");
    IntPolynomial r(a.alphabet());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, checked_mul(ca, cb));
    return r;
}

IntPolynomial scalar_mul(const IntPolynomial& a, Coeff c) {
    IntPolynomial r(a.alphabet());
    r.add_scaled(a, c);
    return r;
}

IntPolynomial pow(const IntPolynomial& a, int e) {
    IntPolynomial r = IntPolynomial::constant(1, a.alphabet());
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

IntPolynomial divided_difference(const IntPolynomial& f, int i) {
    if (f.alphabet().two()) throw DomainError("divided differences need a single alphabet");
    if (i < 1 || i >= kMaxVariables) throw DomainError("divided difference index out of range");
    const int ai = i - 1, bi = i;
    IntPolynomial r;
    for (const auto& [m, c] : f.terms()) {
        const int a = m[ai], b = m[bi];
        if (a == b) continue;
        const int hi = std::max(a, b), lo = std::min(a, b);
        const Coeff sign = a > b ? c : -c;
        // x^a y^b - x^b y^a = x^lo y^lo (x - y) sum_{j} x^{hi-lo-1-j} y^j
        Monomial t = m;
        for (int j = 0; j < hi - lo; ++j) {
            t.set(ai, hi - 1 - j);
            t.set(bi, lo + j);
            r.add_term(t, sign);
        }
    }
    return r;
}

IntPolynomial divided_difference_word(IntPolynomial f, const std::vector<int>& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(f, *it);
    return f;
}

IntPolynomial swap_variables(const IntPolynomial& f, int i) {
    IntPolynomial r(f.alphabet());
    for (const auto& [m, c] : f.terms()) {
        Monomial t = m;
        t.set(i - 1, m[i]);
        t.set(i, m[i - 1]);
        r.add_term(t, c);
    }
    return r;
}

IntPolynomial substitute(const IntPolynomial& f, const std::vector<int>& sigma, Alphabet target) {
    IntPolynomial r(target);
    for (const auto& [m, c] : f.terms()) {
        Monomial t;
        bool zero = false;
        for (int axis = 0; axis < m.width(); ++axis) {
            const int e = m[axis];
            if (e == 0) continue;
            if (axis >= static_cast<int>(sigma.size()) || sigma[axis] < 0)
                throw DomainError("unmapped variable " + f.alphabet().variable_name(axis));
            if (sigma[axis] == 0) {
                zero = true;
                break;
            }
            const int dst = sigma[axis] - 1;
            t.set(dst, t[dst] + e);
        }
        if (!zero) r.add_term(t, c);
    }
    return r;
}

std::string to_string(const IntPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.sorted_terms()) {
        Coeff a = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (int axis = 0; axis < m.width(); ++axis) {
            if (!m[axis]) continue;
            if (!mono.empty()) mono += '*';
            mono += f.alphabet().variable_name(axis);
            if (m[axis] > 1) mono += '^' + std::to_string(m[axis]);
        }
        if (mono.empty()) {
            out << a;
        } else {
            if (a != 1) out << a << '*';
            out << mono;
        }
    }
    return out.str();
}

IntPolynomial parse_polynomial(const std::string& text) {
    struct Factor {
        char letter;
        int index;
        int exponent;
    };
    struct Term {
        Coeff coeff;
        std::vector<Factor> factors;
    };
    std::vector<Term> terms;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) -> void {
        throw DomainError(what + " at position " + std::to_string(i + 1));
    };
    auto read_int = [&]() -> long long {
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
        long long v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > (1LL << 62)) fail("number too large");
            ++i;
        }
        return v;
    };
    skip();
    if (i == n) fail("empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (i == n) break;
        Coeff sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Term term{sign, {}};
        bool expect_factor = true;
        bool have_number = false;
        while (expect_factor) {
            skip();
            if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                if (have_number) fail("two numeric factors");
                term.coeff = checked_mul(term.coeff, read_int());
                have_number = true;
            } else if (i < n && (text[i] == 'x' || text[i] == 'y' || text[i] == 'z')) {
                char letter = text[i++];
                int idx = static_cast<int>(read_int());
                if (idx < 1) fail("variable index must be positive");
                int e = 1;
                if (i < n && text[i] == '^') {
                    ++i;
                    e = static_cast<int>(read_int());
                }
                term.factors.push_back({letter, idx, e});
            } else {
                fail("expected a coefficient or variable");
            }
            skip();
            if (i < n && text[i] == '*') {
                ++i;
            } else {
                expect_factor = false;
            }
        }
        terms.push_back(term);
    }
    bool has_x = false, has_yz = false;
    int max_y = 0;
    for (const auto& t : terms)
        for (const auto& f : t.factors) {
            if (f.letter == 'x') has_x = true;
            else has_yz = true;
            if (f.letter == 'y') max_y = std::max(max_y, f.index);
        }
    if (has_x && has_yz) throw DomainError("polynomial mixes the x alphabet with y/z");
    Alphabet alphabet{has_yz ? std::max(max_y, 1) : 0};
    IntPolynomial p(alphabet);
    for (const auto& t : terms) {
        Monomial m;
        for (const auto& f : t.factors) {
            int axis = f.letter == 'z' ? alphabet.split + f.index - 1 : f.index - 1;
            if (axis >= kMaxVariables) throw DomainError("variable index too large");
            m.set(axis, m[axis] + f.exponent);
        }
        p.add_term(m, t.coeff);
    }
    return p;
}

} // namespace bruhat
