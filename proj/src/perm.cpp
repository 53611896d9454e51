#include "bruhat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bruhat {

namespace {

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
    return v;
}

void check_bijection(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<int> seen(n + 1, 0);
    for (int x : v) {
        if (x < 1 || x > n)
            throw DomainError("value " + std::to_string(x) + " out of range 1.." + std::to_string(n));
        if (seen[x]++)
            throw DomainError("repeated value " + std::to_string(x));
    }
}

} // namespace

Permutation::Permutation(std::vector<int> images) {
    check_bijection(images);
    images_ = trimmed(std::move(images));
}

Permutation Permutation::transposition(int a, int b) {
    if (a < 1 || b < 1) throw DomainError("transposition entries must be positive");
    std::vector<int> v(std::max(a, b));
    std::iota(v.begin(), v.end(), 1);
    std::swap(v[a - 1], v[b - 1]);
    return Permutation(v);
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
    Permutation result;
    for (const auto& c : cycles) {
        if (c.empty()) continue;
        int n = 0;
        for (int x : c) {
            if (x < 1) throw DomainError("cycle entries must be positive, got " + std::to_string(x));
            n = std::max(n, x);
        }
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        std::vector<bool> used(n + 1, false);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (used[c[i]]) throw DomainError("repeated value " + std::to_string(c[i]) + " in cycle");
            used[c[i]] = true;
            v[c[i] - 1] = c[(i + 1) % c.size()];
        }
        result = result * Permutation(v);
    }
    return result;
}

std::vector<int> Permutation::one_line(int n) const {
    std::vector<int> v(std::max(n, size()));
    for (int i = 1; i <= static_cast<int>(v.size()); ++i) v[i - 1] = (*this)(i);
    return v;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 0; i < size(); ++i) v[images_[i] - 1] = i + 1;
    Permutation p;
    p.images_ = std::move(v);
    return p;
}

Permutation Permutation::swap_positions(int a, int b) const {
    auto v = one_line(std::max(a, b));
    std::swap(v[a - 1], v[b - 1]);
    Permutation p;
    p.images_ = trimmed(std::move(v));
    return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size() + 1, false);
    for (int i = 1; i <= size(); ++i) {
        if (seen[i] || (*this)(i) == i) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = (*this)(j)) {
            seen[j] = true;
            c.push_back(j);
        }
        out.push_back(c);
    }
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    const int n = std::max(a.size(), b.size());
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = a(b(i));
    return Permutation(std::move(v));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : p.images()) {
        h ^= static_cast<std::size_t>(x);
        h *= 0x100000001b3ull;
    }
    return h;
}

Permutation parse_permutation(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch)) || !text.empty()) text += ch;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    if (text.empty()) throw DomainError("empty permutation");

    auto number = [&](const std::string& tok, std::size_t pos) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw DomainError("malformed token '" + tok + "' at position " + std::to_string(pos + 1));
        return std::stoi(tok);
    };

    if (text.front() == '(') {
        std::vector<std::vector<int>> cycles;
        std::size_t i = 0;
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            if (text[i] != '(') throw DomainError("expected '(' at position " + std::to_string(i + 1));
            std::size_t close = text.find(')', i);
            if (close == std::string::npos) throw DomainError("unclosed cycle at position " + std::to_string(i + 1));
            std::string body = text.substr(i + 1, close - i - 1);
            std::vector<int> cyc;
            const bool separated = body.find_first_of(" ,") != std::string::npos;
            if (separated) {
                std::string tok;
                std::size_t start = i + 1;
                for (std::size_t j = 0; j <= body.size(); ++j) {
                    if (j == body.size() || body[j] == ' ' || body[j] == ',') {
                        if (!tok.empty()) cyc.push_back(number(tok, start));
                        tok.clear();
                        start = i + 2 + j;
                    } else {
                        tok += body[j];
                    }
                }
            } else {
                for (std::size_t j = 0; j < body.size(); ++j) cyc.push_back(number(std::string(1, body[j]), i + 1 + j));
            }
            cycles.push_back(cyc);
            i = close + 1;
        }
        return Permutation::from_cycles(cycles);
    }

    std::vector<int> v;
    if (text.front() == '[') {
        if (text.back() != ']') throw DomainError("missing ']' in bracketed permutation");
        std::string body = text.substr(1, text.size() - 2);
        std::string tok;
        std::size_t start = 1;
        for (std::size_t j = 0; j <= body.size(); ++j) {
            if (j == body.size() || body[j] == ',') {
                std::string t;
                for (char c : tok)
                    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
                if (!(t.empty() && body.empty())) v.push_back(number(t, start));
                tok.clear();
                start = j + 2;
            } else {
                tok += body[j];
            }
        }
    } else {
        for (std::size_t j = 0; j < text.size(); ++j) v.push_back(number(std::string(1, text[j]), j));
    }
    const int n = static_cast<int>(v.size());
    std::vector<int> count(n + 1, 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] < 1 || v[j] > n)
            throw DomainError("value " + std::to_string(v[j]) + " at position " + std::to_string(j + 1) +
                              " out of range 1.." + std::to_string(n));
        if (count[v[j]]++)
            throw DomainError("repeated value " + std::to_string(v[j]) + " at position " + std::to_string(j + 1));
    }
    return Permutation(v);
}

std::string to_string(const Permutation& w, int n) {
    auto v = w.one_line(n);
    if (v.empty()) return "1";
    std::ostringstream out;
    const bool compact = v.size() <= 9;
    if (!compact) out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!compact && i) out << ',';
        out << v[i];
    }
    if (!compact) out << ']';
    return out.str();
}

std::string to_string(const Permutation& w) {
    return w.is_identity() ? "1" : to_string(w, w.size());
}

std::string cycle_string(const Permutation& w) {
    if (w.is_identity()) return "()";
    std::ostringstream out;
    for (const auto& c : w.cycles()) {
        out << '(';
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
        out << ')';
    }
    return out.str();
}

int length(const Permutation& w) {
    int inv = 0;
    const auto& v = w.images();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j];
    return inv;
}

std::vector<int> lehmer_code(const Permutation& w) {
    const auto& v = w.images();
    std::vector<int> code(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) code[i] += v[j] < v[i];
    while (!code.empty() && code.back() == 0) code.pop_back();
    return code;
}

Permutation decode_lehmer(const std::vector<int>& code, int n) {
    if (static_cast<int>(code.size()) > n) throw DomainError("code longer than ambient size");
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> v;
    for (int i = 0; i < n; ++i) {
        int c = i < static_cast<int>(code.size()) ? code[i] : 0;
        if (c < 0 || c > n - 1 - i)
            throw DomainError("malformed code entry " + std::to_string(c) + " at position " + std::to_string(i + 1));
        v.push_back(avail[c]);
        avail.erase(avail.begin() + c);
    }
    return Permutation(v);
}

Permutation decode_lehmer(const std::vector<int>& code) {
    int n = 0;
    for (int i = 0; i < static_cast<int>(code.size()); ++i) {
        if (code[i] < 0) throw DomainError("negative code entry at position " + std::to_string(i + 1));
        n = std::max(n, i + 1 + code[i]);
    }
    return decode_lehmer(code, n);
}

std::vector<int> descents(const Permutation& w) {
    std::vector<int> d;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) d.push_back(i);
    return d;
}

int last_descent(const Permutation& w) {
    auto d = descents(w);
    return d.empty() ? 0 : d.back();
}

Permutation w0(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(v);
}

Permutation bar(const Permutation& w, int n) {
    if (w.size() > n) throw DomainError("ambient size smaller than permutation degree");
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = n + 1 - w(n + 1 - i);
    return Permutation(v);
}

Permutation cross(const Permutation& u, const Permutation& v, int n) {
    if (u.size() > n) throw DomainError("first factor does not fit in the ambient size");
    std::vector<int> out = u.one_line(n);
    for (int i = 1; i <= v.size(); ++i) out.push_back(n + v(i));
    return Permutation(out);
}

Permutation epsilon_pq(const Permutation& w, int p, int q) {
    if (p < 1 || q < 1) throw DomainError("epsilon_pq requires p, q >= 1");
    const int n = std::max({w.size(), p, q});
    std::vector<int> v(n + 1);
    for (int j = 1; j <= n + 1; ++j) {
        if (j < p) {
            v[j - 1] = w(j) < q ? w(j) : w(j) + 1;
        } else if (j == p) {
            v[j - 1] = q;
        } else {
            v[j - 1] = w(j - 1) < q ? w(j - 1) : w(j - 1) + 1;
        }
    }
    return Permutation(v);
}

Permutation delete_p(const Permutation& x, int p) {
    if (p < 1) throw DomainError("delete_p requires p >= 1");
    const int n = std::max(x.size(), p);
    const int xp = x(p);
    std::vector<int> v(n - 1);
    for (int j = 1; j <= n - 1; ++j) {
        int val = j < p ? x(j) : x(j + 1);
        v[j - 1] = val < xp ? val : val - 1;
    }
    return Permutation(v);
}

Permutation phi_P(const Permutation& xi, const std::vector<int>& P) {
    if (static_cast<int>(P.size()) < xi.size()) throw DomainError("P shorter than the degree of the permutation");
    for (std::size_t i = 0; i < P.size(); ++i)
        if (P[i] < 1 || (i && P[i] <= P[i - 1])) throw DomainError("P must be strictly increasing positive integers");
    const int n = P.empty() ? 0 : P.back();
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (int i = 1; i <= xi.size(); ++i) v[P[i - 1] - 1] = P[xi(i) - 1];
    return Permutation(v);
}

Permutation epsilon_PQ(const Permutation& v, const Permutation& w,
                       const std::vector<int>& P, const std::vector<int>& Q, int total) {
    if (P.size() != Q.size()) throw DomainError("P and Q must have equal size");
    const int n = static_cast<int>(P.size());
    const int m = total - n;
    if (v.size() > n || w.size() > m) throw DomainError("permutation does not fit its block");
    auto complement = [&](const std::vector<int>& S) {
        std::vector<bool> in(total + 1, false);
        for (int x : S) {
            if (x < 1 || x > total || in[x]) throw DomainError("subset must consist of distinct elements of [n+m]");
            in[x] = true;
        }
        std::vector<int> c;
        for (int x = 1; x <= total; ++x)
            if (!in[x]) c.push_back(x);
        return c;
    };
    auto Pc = complement(P);
    auto Qc = complement(Q);
    std::vector<int> sp = P, sq = Q;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    std::vector<int> out(total);
    for (int i = 1; i <= n; ++i) out[sp[i - 1] - 1] = sq[v(i) - 1];
    for (int j = 1; j <= m; ++j) out[Pc[j - 1] - 1] = Qc[w(j) - 1];
    return Permutation(out);
}

std::vector<int> support(const Permutation& zeta) {
    std::vector<int> s;
    for (int i = 1; i <= zeta.size(); ++i)
        if (zeta(i) != i) s.push_back(i);
    return s;
}

CycleStats cycle_stats(const Permutation& zeta) {
    CycleStats st;
    for (int a = 1; a <= zeta.size(); ++a) {
        if (a < zeta(a)) st.up.push_back(a);
        if (a > zeta(a)) st.down.push_back(a);
        if (a != zeta(a)) st.support.push_back(a);
    }
    int up_over_down = 0, up_inverted = 0, down_inverted = 0, up_after_down = 0;
    for (int a : st.up)
        for (int b : st.down) {
            up_over_down += zeta(a) > zeta(b);
            up_after_down += a > b;
        }
    for (int a : st.up)
        for (int b : st.up) up_inverted += a > b && zeta(a) < zeta(b);
    for (int a : st.down)
        for (int b : st.down) down_inverted += a > b && zeta(a) < zeta(b);
    st.rank_abs = up_over_down - up_inverted - down_inverted - up_after_down;
    return st;
}

int rank_abs(const Permutation& zeta) {
    return cycle_stats(zeta).rank_abs;
}

Permutation shape_canonical(const Permutation& zeta) {
    auto s = support(zeta);
    std::vector<int> index(zeta.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i) + 1;
    std::vector<int> v;
    for (int a : s) v.push_back(index[zeta(a)]);
    return Permutation(v);
}

bool shape_equivalent(const Permutation& zeta, const Permutation& eta) {
    return shape_canonical(zeta) == shape_canonical(eta);
}

Permutation cyclic_shift(const Permutation& zeta, int n) {
    if (zeta.size() > n) throw DomainError("ambient size smaller than the support of the permutation");
    if (n == 0) return zeta;
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) {
        // sigma(i) = i + 1 mod n; result(sigma(i)) = sigma(zeta(i))
        int si = i % n + 1;
        v[si - 1] = zeta(i) % n + 1;
    }
    return Permutation(v);
}

bool is_disjoint(const Permutation& zeta, const Permutation& eta) {
    auto a = support(zeta);
    auto b = support(eta);
    for (int x : a)
        if (std::binary_search(b.begin(), b.end(), x)) return false;
    return rank_abs(zeta * eta) == rank_abs(zeta) + rank_abs(eta);
}

bool crossing_oracle(const Permutation& zeta, const Permutation& eta) {
    auto a = support(zeta);
    auto b = support(eta);
    for (int x : a)
        if (std::binary_search(b.begin(), b.end(), x))
            throw DomainError("crossing oracle requires disjoint supports");
    auto chords = [](const Permutation& p) {
        std::vector<std::pair<int, int>> c;
        for (int x : support(p)) c.emplace_back(std::min(x, p(x)), std::max(x, p(x)));
        return c;
    };
    for (auto [p, q] : chords(zeta))
        for (auto [r, s] : chords(eta)) {
            bool r_in = p < r && r < q;
            bool s_in = p < s && s < q;
            if (r_in != s_in) return true;
        }
    return false;
}

Permutation grassmannian(const Partition& lambda, int k) {
    if (lambda.length() > k) throw DomainError("partition " + lambda.str() + " has more than " + std::to_string(k) + " parts");
    std::vector<int> first;
    int n = k;
    for (int j = 1; j <= k; ++j) {
        first.push_back(lambda[k - j] + j);
        n = std::max(n, first.back());
    }
    std::vector<bool> used(n + 1, false);
    for (int x : first) used[x] = true;
    for (int x = 1; x <= n; ++x)
        if (!used[x]) first.push_back(x);
    return Permutation(first);
}

std::optional<std::pair<Partition, int>> decode_grassmannian(const Permutation& w) {
    auto d = descents(w);
    if (d.empty()) return std::make_pair(Partition(), 0);
    if (d.size() > 1) return std::nullopt;
    const int k = d[0];
    std::vector<int> parts(k);
    for (int j = 1; j <= k; ++j) parts[k - j] = w(j) - j;
    return std::make_pair(Partition(parts), k);
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace bruhat
