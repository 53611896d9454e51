#include "bruhat/schubert.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "bruhat/orders.hpp"

namespace bruhat {

bool LengthLexLess::operator()(const Permutation& a, const Permutation& b) const {
    const int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
}

void SchubertExpansion::add(const Permutation& w, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) coeffs_.erase(it);
    }
}

Coeff SchubertExpansion::operator[](const Permutation& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? 0 : it->second;
}

std::set<Permutation> SchubertExpansion::support() const {
    std::set<Permutation> s;
    for (const auto& [w, c] : coeffs_) s.insert(w);
    return s;
}

std::string SchubertExpansion::str() const {
    std::ostringstream out;
    for (const auto& [w, c] : coeffs_) out << to_string(w) << ": " << c << '\n';
    return out.str();
}

IntPolynomial SchubertExpansion::reconstruct() const {
    IntPolynomial f;
    for (const auto& [w, c] : coeffs_) f.add_scaled(schubert_poly(w), c);
    return f;
}

bool TwoAlphabetExpansion::KeyLess::operator()(const Key& a, const Key& b) const {
    LengthLexLess less;
    if (a.first != b.first) return less(a.first, b.first);
    return less(a.second, b.second);
}

void TwoAlphabetExpansion::add(const Permutation& u, const Permutation& v, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace({u, v}, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) coeffs_.erase(it);
    }
}

Coeff TwoAlphabetExpansion::at(const Permutation& u, const Permutation& v) const {
    auto it = coeffs_.find({u, v});
    return it == coeffs_.end() ? 0 : it->second;
}

std::string TwoAlphabetExpansion::str() const {
    std::ostringstream out;
    for (const auto& [k, c] : coeffs_) out << to_string(k.first) << " | " << to_string(k.second) << ": " << c << '\n';
    return out.str();
}

namespace {

IntPolynomial staircase(int n) {
    Monomial m;
    for (int i = 1; i < n; ++i) m.set(i - 1, n - i);
    return IntPolynomial::monomial(m);
}

struct SchubertCache {
    std::shared_mutex mutex;
    std::unordered_map<Permutation, IntPolynomial> polys;
};

SchubertCache& cache() {
    static SchubertCache c;
    return c;
}

const IntPolynomial* cached(const Permutation& w) {
    auto& c = cache();
    std::shared_lock lock(c.mutex);
    auto it = c.polys.find(w);
    return it == c.polys.end() ? nullptr : &it->second;
}

const IntPolynomial& store(const Permutation& w, IntPolynomial f) {
    auto& c = cache();
    std::unique_lock lock(c.mutex);
    return c.polys.try_emplace(w, std::move(f)).first->second;
}

// Weakly decreasing code: the Schubert polynomial is the monomial x^code.
bool is_dominant(const std::vector<int>& code) {
    for (std::size_t i = 1; i < code.size(); ++i)
        if (code[i] > code[i - 1]) return false;
    return true;
}

int first_ascent(const Permutation& w, int n) {
    for (int i = 1; i < n; ++i)
        if (w(i) < w(i + 1)) return i;
    return 0;
}

} // namespace

const IntPolynomial& schubert_poly(const Permutation& w) {
    if (const auto* hit = cached(w)) return *hit;
    const int n = std::max(w.size(), 1);
    // Climb by smallest ascents until a cached or dominant permutation.
    std::vector<Permutation> path{w};
    std::vector<int> steps;
    const IntPolynomial* base = nullptr;
    while (true) {
        const Permutation& cur = path.back();
        if (path.size() > 1) base = cached(cur);
        if (base) break;
        if (const auto code = lehmer_code(cur); is_dominant(code)) {
            Monomial m;
            for (std::size_t i = 0; i < code.size(); ++i) m.set(static_cast<int>(i), code[i]);
            base = &store(cur, IntPolynomial::monomial(m));
            break;
        }
        const int i = first_ascent(cur, n);
        if (i == 0) {
            base = &store(cur, staircase(n));
            break;
        }
        steps.push_back(i);
        path.push_back(cur.swap_positions(i, i + 1));
    }
    IntPolynomial f = *base;
    const IntPolynomial* result = base;
    for (int j = static_cast<int>(steps.size()) - 1; j >= 0; --j) {
        f = divided_difference(f, steps[j]);
        result = &store(path[j], f);
    }
    return *result;
}

IntPolynomial schubert_poly_by_word(const Permutation& w, WordStrategy strategy) {
    const int n = std::max(w.size(), 1);
    Permutation v = w.inverse() * w0(n);
    std::vector<int> word;
    while (!v.is_identity()) {
        const Permutation vi = v.inverse();
        int pick = 0;
        for (int i = 1; i < n; ++i) {
            if (vi(i) > vi(i + 1)) {
                pick = i;
                if (strategy == WordStrategy::SmallestLeftDescent) break;
            }
        }
        word.push_back(pick);
        v = Permutation::transposition(pick, pick + 1) * v;
    }
    return divided_difference_word(staircase(n), word);
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> letters;
    Permutation cur = w;
    while (!cur.is_identity()) {
        int i = descents(cur).front();
        letters.push_back(i);
        cur = cur.swap_positions(i, i + 1);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

IntPolynomial schur_poly(const Partition& lambda, int k) {
    if (lambda.length() > k) throw DomainError("partition " + lambda.str() + " has more than " + std::to_string(k) + " parts");
    // Branching: S_lambda(x_1..x_k) = sum over horizontal strips lambda/mu of S_mu(x_1..x_{k-1}) x_k^{|lambda/mu|}.
    std::map<std::pair<std::vector<int>, int>, IntPolynomial> memo;
    std::function<IntPolynomial(const std::vector<int>&, int)> rec = [&](const std::vector<int>& lam, int vars) -> IntPolynomial {
        int len = 0;
        while (len < static_cast<int>(lam.size()) && lam[len] > 0) ++len;
        if (len == 0) return IntPolynomial::constant(1);
        if (len > vars) return IntPolynomial();
        auto key = std::make_pair(lam, vars);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        IntPolynomial total;
        std::vector<int> mu(lam.size(), 0);
        std::function<void(int)> choose = [&](int i) {
            if (i == static_cast<int>(lam.size())) {
                int removed = 0;
                for (std::size_t j = 0; j < lam.size(); ++j) removed += lam[j] - mu[j];
                IntPolynomial sub = rec(mu, vars - 1);
                if (sub.is_zero()) return;
                Monomial m;
                m.set(vars - 1, removed);
                total += sub * IntPolynomial::monomial(m);
                return;
            }
            const int hi = lam[i];
            const int lo = i + 1 < static_cast<int>(lam.size()) ? lam[i + 1] : 0;
            for (int x = lo; x <= hi; ++x) {
                mu[i] = x;
                choose(i + 1);
            }
        };
        choose(0);
        memo[key] = total;
        return total;
    };
    return rec(lambda.parts(), k);
}

IntPolynomial elementary_poly(int m, int k) {
    if (m > k) return IntPolynomial();
    return schur_poly(Partition(std::vector<int>(m, 1)), k);
}

IntPolynomial complete_poly(int m, int k) {
    if (m == 0) return IntPolynomial::constant(1);
    if (k == 0) return IntPolynomial();
    return schur_poly(Partition({m}), k);
}

namespace {

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return b.lex_less(a); }
};

} // namespace

SchubertExpansion expand_in_schubert_basis(const IntPolynomial& f) {
    if (f.alphabet().two()) throw DomainError("single-alphabet polynomial expected");
    std::map<Monomial, Coeff, LexGreater> work(f.terms().begin(), f.terms().end());
    SchubertExpansion out;
    while (!work.empty()) {
        const Monomial lead = work.begin()->first;
        const Coeff c = work.begin()->second;
        const Permutation w = decode_lehmer(lead.exponents());
        const IntPolynomial& s = schubert_poly(w);
        for (const auto& [m, d] : s.terms()) {
            auto [it, inserted] = work.try_emplace(m, checked_mul(-c, d));
            if (!inserted) {
                it->second = checked_add(it->second, checked_mul(-c, d));
                if (it->second == 0) work.erase(it);
            }
        }
        if (work.count(lead))
            throw std::logic_error("leading-term law violated while expanding at " + to_string(w));
        out.add(w, c);
    }
    return out;
}

Coeff schubert_coefficient(const IntPolynomial& f, const Permutation& w) {
    const int d = length(w);
    IntPolynomial g;
    for (const auto& [m, c] : f.terms())
        if (m.degree() == d) g.add_term(m, c);
    for (int i : [&] { auto r = reduced_word(w); std::reverse(r.begin(), r.end()); return r; }()) {
        if (g.is_zero()) return 0;
        g = divided_difference(g, i);
    }
    return g.coefficient(Monomial());
}

Coeff structure_constant(const Permutation& u, const Permutation& v, const Permutation& w) {
    if (length(w) != length(u) + length(v)) return 0;
    return schubert_coefficient(schubert_poly(u) * schubert_poly(v), w);
}

SchubertExpansion product_expansion(const Permutation& u, const Permutation& v) {
    return expand_in_schubert_basis(schubert_poly(u) * schubert_poly(v));
}

SchubertExpansion monk_multiply(const Permutation& u, int k) {
    if (k < 1) throw DomainError("k must be positive");
    SchubertExpansion out;
    const int n = std::max(u.size(), k) + 1;
    for (auto& [t, label] : k_covers_up(u, k, n)) out.add(t, 1);
    return out;
}

namespace {

std::set<Permutation> pieri_targets(const Permutation& u, int k, int m, bool decreasing) {
    if (k < 1 || m < 0) throw DomainError("Pieri targets need k >= 1 and m >= 0");
    const int n = std::max(u.size(), k) + m;
    std::set<Permutation> out;
    std::set<std::tuple<Permutation, int, int>> seen;
    std::function<void(const Permutation&, int, int)> dfs = [&](const Permutation& v, int last, int left) {
        if (!seen.emplace(v, last, left).second) return;
        if (left == 0) {
            out.insert(v);
            return;
        }
        for (auto& [t, beta] : k_covers_up(v, k, n)) {
            if (last != 0 && (decreasing ? beta >= last : beta <= last)) continue;
            dfs(t, beta, left - 1);
        }
    };
    dfs(u, 0, m);
    return out;
}

} // namespace

std::set<Permutation> pieri_targets_c(const Permutation& u, int k, int m) {
    return pieri_targets(u, k, m, true);
}

std::set<Permutation> pieri_targets_r(const Permutation& u, int k, int m) {
    return pieri_targets(u, k, m, false);
}

std::set<Permutation> a_p_set(const Permutation& x, int p) {
    if (p < 1) throw DomainError("p must be positive");
    std::set<Permutation> out;
    if (p == 1) {
        if (x(1) == 1) out.insert(delete_p(x, 1));
        return out;
    }
    for (const auto& z : pieri_targets_c(x, p - 1, p - 1))
        if (z(p) == 1) out.insert(delete_p(z, p));
    return out;
}

std::set<Permutation> a_p_set_via_r(const Permutation& x, int p, int n) {
    if (x.size() > n || p < 1 || p > n) throw DomainError("need x in S_n and 1 <= p <= n");
    std::set<Permutation> out;
    for (const auto& z : pieri_targets_r(x, p, n + 1 - p))
        if (z(p) == n + 1) out.insert(delete_p(z, p));
    return out;
}

IntPolynomial psi_p_polynomial(const Permutation& w, int p) {
    if (p < 1) throw DomainError("p must be positive");
    const IntPolynomial& f = schubert_poly(w);
    int width = 0;
    for (const auto& [m, c] : f.terms()) width = std::max(width, m.width());
    std::vector<int> sigma(std::max(width, p));
    for (int i = 1; i <= static_cast<int>(sigma.size()); ++i) sigma[i - 1] = i < p ? i : (i == p ? 0 : i - 1);
    return substitute(f, sigma, Alphabet{});
}

SchubertExpansion psi_p(const Permutation& w, int p) {
    SchubertExpansion direct = expand_in_schubert_basis(psi_p_polynomial(w, p));
    SchubertExpansion indexed;
    for (const auto& u : a_p_set(w, p)) indexed.add(u, 1);
    if (!(direct == indexed))
        throw std::logic_error("psi_p routes disagree for " + to_string(w) + " at p = " + std::to_string(p));
    return direct;
}

IntPolynomial psi_P_polynomial(const Permutation& w, const std::vector<int>& P, int bound) {
    const IntPolynomial& f = schubert_poly(w);
    int width = 0;
    for (const auto& [m, c] : f.terms()) width = std::max(width, m.width());
    if (width > bound) throw DomainError("bound " + std::to_string(bound) + " is below the variable window of the Schubert polynomial");
    std::vector<bool> inP(bound + 1, false);
    for (int p : P) {
        if (p < 1) throw DomainError("P must consist of positive integers");
        if (p <= bound) inP[p] = true;
    }
    const int ys = static_cast<int>(std::count(inP.begin(), inP.end(), true));
    Alphabet target{std::max(ys, 1)};
    if (target.split + (bound - ys) > kMaxVariables) throw DomainError("too many variables");
    std::vector<int> sigma(bound);
    int y = 0, z = 0;
    for (int i = 1; i <= bound; ++i) sigma[i - 1] = inP[i] ? ++y : target.split + ++z;
    return substitute(f, sigma, target);
}

TwoAlphabetExpansion expand_two_alphabet(const IntPolynomial& f) {
    const Alphabet ab = f.alphabet();
    if (!ab.two()) throw DomainError("two-alphabet polynomial expected");
    std::map<Monomial, Coeff, LexGreater> work(f.terms().begin(), f.terms().end());
    TwoAlphabetExpansion out;
    while (!work.empty()) {
        const Monomial lead = work.begin()->first;
        const Coeff c = work.begin()->second;
        auto e = lead.exponents();
        e.resize(std::max<std::size_t>(e.size(), ab.split), 0);
        std::vector<int> cy(e.begin(), e.begin() + ab.split), cz(e.begin() + ab.split, e.end());
        const Permutation u = decode_lehmer(cy), v = decode_lehmer(cz);
        std::vector<int> sy(kMaxVariables, -1), sz(kMaxVariables, -1);
        for (int i = 0; i < ab.split; ++i) sy[i] = i + 1;
        for (int i = 0; ab.split + i < kMaxVariables; ++i) sz[i] = ab.split + i + 1;
        IntPolynomial basis = substitute(schubert_poly(u), sy, ab) * substitute(schubert_poly(v), sz, ab);
        for (const auto& [m, d] : basis.terms()) {
            auto [it, inserted] = work.try_emplace(m, checked_mul(-c, d));
            if (!inserted) {
                it->second = checked_add(it->second, checked_mul(-c, d));
                if (it->second == 0) work.erase(it);
            }
        }
        if (work.count(lead))
            throw std::logic_error("leading-term law violated in two-alphabet expansion");
        out.add(u, v, c);
    }
    return out;
}

TwoAlphabetExpansion psi_P_expand(const Permutation& w, const std::vector<int>& P, int bound) {
    return expand_two_alphabet(psi_P_polynomial(w, P, bound));
}

Permutation i_p_element(const std::vector<int>& P, int l, int d, const std::vector<int>& R) {
    if (l < 0 || d < 0) throw DomainError("l and d must be non-negative");
    std::set<int> r(R.begin(), R.end());
    if (static_cast<int>(r.size()) != l || r.size() != R.size()) throw DomainError("R must consist of l distinct elements");
    for (int x : r)
        if (x <= d || x > d + 2 * l) throw DomainError("R must lie in {d+1, ..., d+2l}");
    std::set<int> bar;
    for (int p : P)
        if (p >= 1 && p <= d) bar.insert(p);
    bar.insert(r.begin(), r.end());
    std::vector<int> Pbar(bar.begin(), bar.end());
    std::vector<int> Q(Pbar.size());
    for (std::size_t i = 0; i < Q.size(); ++i) Q[i] = static_cast<int>(i) + 1;
    return epsilon_PQ(Permutation(), Permutation(), Pbar, Q, d + 2 * l);
}

Permutation canonical_u_for(const Permutation& zeta, int k) {
    const auto st = cycle_stats(zeta);
    const int ups = static_cast<int>(st.up.size());
    if (k < ups) throw DomainError("k = " + std::to_string(k) + " is smaller than #up = " + std::to_string(ups));
    std::vector<int> first = st.up;
    int need = k - ups;
    int x = 1;
    while (need > 0) {
        if (zeta(x) == x) {
            first.push_back(x);
            --need;
        }
        ++x;
    }
    const int n = std::max({zeta.size(), x - 1, k});
    auto by_image = [&](int a, int b) { return zeta(a) < zeta(b); };
    std::sort(first.begin(), first.end(), by_image);
    std::vector<bool> used(n + 1, false);
    for (int a : first) used[a] = true;
    std::vector<int> rest;
    for (int a = 1; a <= n; ++a)
        if (!used[a]) rest.push_back(a);
    std::sort(rest.begin(), rest.end(), by_image);
    first.insert(first.end(), rest.begin(), rest.end());
    return Permutation(first);
}

namespace {

int lr_k(const Permutation& zeta, const Partition& lambda) {
    const int ups = static_cast<int>(cycle_stats(zeta).up.size());
    return std::max({ups, lambda.length(), 1});
}

} // namespace

// Jacobi-Trudi: S_lambda = det h_{lambda_i - i + j}, each h_m applied by the Pieri rule.
Coeff lr_coeff_perm(const Permutation& zeta, const Partition& lambda) {
    if (lambda.size() != rank_abs(zeta)) return 0;
    const int k = lr_k(zeta, lambda);
    const Permutation u = canonical_u_for(zeta, k), w = zeta * u;
    const int l = lambda.length();
    std::vector<int> sigma(l);
    for (int i = 0; i < l; ++i) sigma[i] = i;
    Coeff total = 0;
    do {
        std::vector<int> degrees;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            const int m = lambda[i] - i + sigma[i];
            ok = m >= 0;
            if (m > 0) degrees.push_back(m);
        }
        if (!ok) continue;
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) inversions += sigma[i] > sigma[j];
        std::map<Permutation, Coeff> cur{{u, 1}};
        for (int m : degrees) {
            std::map<Permutation, Coeff> next;
            for (const auto& [x, c] : cur)
                for (const auto& y : pieri_targets_r(x, k, m))
                    if (k_bruhat_leq(y, w, k)) next[y] = checked_add(next[y], c);
            cur = std::move(next);
        }
        const auto it = cur.find(w);
        if (it != cur.end()) total = checked_add(total, inversions % 2 ? -it->second : it->second);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

Coeff lr_coeff_perm_by_product(const Permutation& zeta, const Partition& lambda) {
    if (lambda.size() != rank_abs(zeta)) return 0;
    const int k = lr_k(zeta, lambda);
    const Permutation u = canonical_u_for(zeta, k);
    return schubert_coefficient(schubert_poly(u) * schur_poly(lambda, k), zeta * u);
}

std::vector<std::pair<Partition, Coeff>> lr_vector(const Permutation& zeta) {
    std::vector<std::pair<Partition, Coeff>> out;
    for (const auto& lambda : partitions_of(rank_abs(zeta))) out.emplace_back(lambda, lr_coeff_perm(zeta, lambda));
    return out;
}

bool is_ballot(const std::vector<int>& A) {
    std::map<int, int> count;
    for (int a : A) {
        if (a < 0) return false;
        if (a == 0) continue;
        ++count[a];
        if (a > 1 && count[a] > count[a - 1]) return false;
    }
    return true;
}

SchubertExpansion psi_ballot(const Permutation& w, const std::vector<int>& A) {
    if (!is_ballot(A)) throw DomainError("not a ballot sequence");
    return expand_in_schubert_basis(substitute(schubert_poly(w), A, Alphabet{}));
}

} // namespace bruhat
