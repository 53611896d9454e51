// Acceptance suite: one PASS/FAIL line per criterion, exact integers only.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bruhat/orders.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/polyring.hpp"
#include "bruhat/schubert.hpp"
#include "bruhat/tableaux.hpp"
#include "bruhat/verify.hpp"

using namespace bruhat;

namespace {

Permutation P(const std::string& s) {
    return parse_permutation(s);
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        detail += (detail.empty() ? "" : "; ") + what;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    out.require(secs < limit_seconds, "over time limit " + std::to_string(limit_seconds) + " s");
    if (!out.ok) ++failures;
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << t.str() << " s)";
    if (!out.detail.empty()) std::cout << "  [" << out.detail << "]";
    std::cout << std::endl;
}

// Terms keyed by (y exponents, z exponents), independent of where the alphabet splits.
using SplitTerms = std::map<std::pair<std::vector<int>, std::vector<int>>, Coeff>;

SplitTerms split_terms(const IntPolynomial& f) {
    SplitTerms out;
    const int split = f.alphabet().split;
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> y, z;
        for (int axis = 0; axis < kMaxVariables; ++axis) {
            auto& v = axis < split ? y : z;
            const int i = axis < split ? axis : axis - split;
            if (m[axis]) {
                if (static_cast<int>(v.size()) <= i) v.resize(i + 1, 0);
                v[i] = m[axis];
            }
        }
        out[{y, z}] += c;
    }
    return out;
}

SplitTerms times(const SplitTerms& a, const SplitTerms& b) {
    SplitTerms out;
    auto add = [](std::vector<int> x, const std::vector<int>& y) {
        if (x.size() < y.size()) x.resize(y.size(), 0);
        for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
        return x;
    };
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out[{add(ka.first, kb.first), add(ka.second, kb.second)}] += ca * cb;
    return out;
}

} // namespace

int main() {
    criterion(1, "Psi_3(S_413652) = S_52341 + S_42531 and the 3-term display", 1.0, [](Outcome& o) {
        const Permutation w = P("413652");
        const auto printed_w = parse_polynomial(
            "x1^4*x2*x4*x5 + x1^3*x2^2*x4*x5 + x1^3*x2*x4^2*x5 + x1^4*x2*x3*x4 + x1^4*x2*x3*x5 + x1^4*x3*x4*x5"
            " + x1^3*x2^2*x3*x4 + x1^3*x2^2*x3*x5 + x1^3*x2*x3^2*x4 + x1^3*x2*x3^2*x5 + x1^3*x2*x3*x4^2"
            " + x1^3*x3^2*x4*x5 + x1^3*x3*x4^2*x5 + 2*x1^3*x2*x3*x4*x5");
        o.require(schubert_poly(w) == printed_w, "S_413652 differs from the printed polynomial");
        const auto printed_psi = parse_polynomial("x1^4*x2*x3*x4 + x1^3*x2^2*x3*x4 + x1^3*x2*x3^2*x4");
        const auto psi = psi_p_polynomial(w, 3);
        o.require(psi == printed_psi, "Psi_3 polynomial " + to_string(psi));
        o.require(schubert_poly(P("52341")) == parse_polynomial("x1^4*x2*x3*x4"), "S_52341");
        o.require(schubert_poly(P("42531")) == parse_polynomial("x1^3*x2^2*x3*x4 + x1^3*x2*x3^2*x4"), "S_42531");
        SchubertExpansion expected;
        expected.add(P("52341"), 1);
        expected.add(P("42531"), 1);
        const auto got = psi_p(w, 3);
        o.require(got == expected, "expansion " + got.str());
    });

    criterion(2, "coloured chains f^45312_32154(P) = 57 with I = {2,3}", 5.0, [](Outcome& o) {
        const std::vector<int> I{2, 3};
        const Permutation u = P("32154"), w = P("45312");
        const Coeff f = coloured_chain_count(u, w, I);
        o.require(f == 57, "f = " + std::to_string(f));
        const std::vector<std::string> vs{"25134", "34125", "24315", "15324", "14523", "23514"};
        const std::vector<Coeff> fv{17, 16, 24, 24, 16, 17}, cv{0, 0, 1, 0, 1, 1};
        Coeff sum = 0;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const Coeff a = coloured_chain_count(Permutation(), P(vs[i]), I);
            const Coeff c = structure_constant(u, P(vs[i]), w);
            o.require(a == fv[i], "f^" + vs[i] + "_e = " + std::to_string(a));
            o.require(c == cv[i], "c^w_{u," + vs[i] + "} = " + std::to_string(c));
            sum += c * a;
        }
        o.require(sum == 57 && sum == 24 + 16 + 17, "weighted sum " + std::to_string(sum));
        o.require(verify_theorem_chains(u, w, I).passed(), "identity over all v in S_5");
    });

    criterion(3, "census (14,21,24), (42,79,120), (132,311,678)", 300.0, [](Outcome& o) {
        const std::vector<CensusCounts> expected{{14, 21, 24}, {42, 79, 120}, {132, 311, 678}};
        for (int n = 4; n <= 6; ++n) {
            const auto c = skew_census(n);
            const auto& e = expected[n - 4];
            o.require(c.skew_partitions == e.skew_partitions && c.shape_equivalent == e.shape_equivalent &&
                          c.skew_permutations == e.skew_permutations,
                      "S_" + std::to_string(n) + ": " + std::to_string(c.skew_partitions) + "," +
                          std::to_string(c.shape_equivalent) + "," + std::to_string(c.skew_permutations));
        }
    });

    criterion(4, "[214365, (153)(246) 214365]_3 has 42 chains = 5*1 + 16*2 + 5*1", 10.0, [](Outcome& o) {
        const Permutation zeta = P("(153)(246)"), u = P("214365");
        o.require(k_bruhat_leq(u, zeta * u, 3), "not a 3-interval");
        const Coeff chains = count_maximal_chains(interval_k(u, zeta * u, 3));
        o.require(chains == 42, "chains = " + std::to_string(chains));
        const std::vector<std::string> lams{"3,3", "3,2,1", "2,2,2"};
        const std::vector<Coeff> want{1, 2, 1}, f{5, 16, 5};
        Coeff sum = 0;
        for (std::size_t i = 0; i < lams.size(); ++i) {
            const Partition lam = parse_partition(lams[i]);
            const Coeff c = lr_coeff_perm(zeta, lam);
            o.require(c == want[i], "c_" + lams[i] + " = " + std::to_string(c));
            o.require(f_lambda(lam) == f[i], "f^" + lams[i]);
            sum += f_lambda(lam) * c;
        }
        o.require(sum == chains, "weighted sum " + std::to_string(sum));
    });

    criterion(5, "[312645, 561234]_2: 6 chains, words, shared recording tableau, c^(162)(354)", 2.0, [](Outcome& o) {
        const auto I = interval_k(P("312645"), P("561234"), 2);
        const Coeff chains = count_maximal_chains(I);
        o.require(chains == 6, "chains = " + std::to_string(chains));
        std::vector<std::vector<int>> expected{{2, 4, 5, 6}, {2, 4, 6, 5}, {2, 6, 4, 5},
                                               {4, 5, 2, 6}, {4, 2, 5, 6}, {4, 2, 6, 5}};
        std::sort(expected.begin(), expected.end());
        o.require(chain_words(I) == expected, "word multiset");
        o.require(schensted({2, 6, 4, 5}).second == schensted({4, 5, 2, 6}).second,
                  "2645 and 4526 have different recording tableaux");
        o.require(P("561234") * P("312645").inverse() == P("(162)(354)"), "wu^-1 != (162)(354)");
        for (const auto* l : {"4", "3,1", "2,2"}) {
            const Coeff c = lr_coeff_perm(P("(162)(354)"), parse_partition(l));
            o.require(c == 1, std::string("c_") + l + " = " + std::to_string(c));
        }
    });

    criterion(6, "[214365,345612]_4 and its cyclic-shift partner [312564,425631]_4: 14 chains each", 5.0,
              [](Outcome& o) {
                  const Permutation u = P("214365"), w = P("345612"), x = P("312564"), z = P("425631");
                  const Coeff a = count_maximal_chains(interval_k(u, w, 4));
                  const Coeff b = count_maximal_chains(interval_k(x, z, 4));
                  o.require(a == 14, "first interval " + std::to_string(a));
                  o.require(b == 14, "partner interval " + std::to_string(b));
                  const Permutation zeta = w * u.inverse(), eta = z * x.inverse();
                  o.require(eta == cyclic_shift(zeta, 6), "partner is not the cyclic shift");
                  o.require(lr_values(zeta) == lr_values(eta), "coefficient vectors over partitions of 6");
              });

    criterion(7, "two-alphabet expansion of Psi_{1,3,5,...}(S_516432)", 5.0, [](Outcome& o) {
        const Permutation w = P("516432");
        const std::vector<int> odd{1, 3, 5, 7, 9, 11};
        // Printed display, distributed.
        const std::vector<std::pair<std::string, std::string>> printed{
            {"54213", "1423"}, {"53214", "4123"}, {"53214", "2413"}, {"54123", "2413"}, {"53124", "4213"},
            {"53124", "3412"}, {"52314", "4213"}, {"52314", "3412"}, {"51324", "4312"}};
        TwoAlphabetExpansion expected;
        for (const auto& [u, v] : printed) expected.add(P(u), P(v), 1);
        const auto got = psi_P_expand(w, odd, 6);
        o.require(got == expected, "expansion:\n" + got.str());
        const std::vector<std::pair<std::string, std::string>> display{
            {"y1^4*y2^3*y3", "z1^2 + z1*z2 + z2^2"},
            {"y1^4*y2^2*y3", "z1^3 + z1*z2^2 + z1^2*z2"},
            {"y1^4*y2^3", "z1^2*z2 + z1*z2^2"},
            {"y1^4*y2^2 + y1^4*y2*y3", "z1^3*z2 + z1^2*z2^2"},
            {"y1^4*y2 + y1^4*y3", "z1^3*z2^2"}};
        SplitTerms want;
        for (const auto& [y, z] : display)
            for (const auto& [k, c] : times(split_terms(parse_polynomial(y)), split_terms(parse_polynomial(z))))
                want[k] += c;
        o.require(split_terms(psi_P_polynomial(w, odd, 6)) == want, "y/z polynomial differs from the display");
        o.require(want.size() == 14, "display has " + std::to_string(want.size()) + " terms");
    });

    criterion(8, "four chain algorithms on 2317546 <_3 4671235", 1.0, [](Outcome& o) {
        const std::vector<std::vector<std::string>> columns{
            {"2317546", "2417536", "2517436", "2617435", "4617235", "4671235"},
            {"2317546", "2417536", "2517436", "4517236", "4617235", "4671235"},
            {"2317546", "2371546", "2571346", "2671345", "3671245", "4671235"},
            {"2317546", "2371546", "2571346", "3571246", "4571236", "4671235"}};
        const std::vector<ChainVariant> variants{ChainVariant::MinUmin, ChainVariant::Conjugate, ChainVariant::MaxWmax,
                                                 ChainVariant::Reverse};
        for (std::size_t i = 0; i < variants.size(); ++i) {
            auto chain = chain_algorithm(P("2317546"), P("4671235"), 3, variants[i]);
            std::reverse(chain.begin(), chain.end());
            std::vector<std::string> got;
            for (const auto& x : chain) got.push_back(to_string(x));
            o.require(got == columns[i], "column " + std::to_string(i + 1) + " (" + to_string(variants[i]) + ")");
        }
    });

    criterion(9, "property suites", 600.0, [](Outcome& o) {
        const std::vector<std::function<VerificationReport()>> suites{
            [] { return verify_basis_round_trip(5); },
            [] { return verify_leading_code(5); },
            [] { return verify_product_dualities(4); },
            [] { return verify_v_times_w(3); },
            [] { return verify_theorem_A(4); },
            [] { return verify_theorem_B(100, 20261019); },
            [] { return verify_theorem_C(6); },
            [] { return verify_theorem_D(5); },
            [] { return verify_symmetries(5); },
            [] { return verify_index_sets(4); },
            [] { return verify_diagonal_word(50, 20261019); },
            [] { return verify_prop_chains(4); },
            [] { return verify_hook_formula(7); },
            [] { return verify_braid_relations(100, 20261019); },
        };
        for (const auto& run : suites) {
            const auto rep = run();
            std::cout << "    " << (rep.passed() ? "ok  " : "FAIL") << " " << rep.check << ": " << rep.cases
                      << " cases, " << rep.universe << std::endl;
            o.require(rep.passed(), rep.check);
        }
    });

    criterion(10, "order complex of (21345,45123)_2: 5 facets, two codimension-2 gluings", 1.0, [](Outcome& o) {
        const auto cx = order_complex_proper(interval_k(P("21345"), P("45123"), 2));
        o.require(cx.facets.size() == 5, "facets = " + std::to_string(cx.facets.size()));
        const auto codim2 = std::count_if(cx.intersections.begin(), cx.intersections.end(),
                                          [](const FacetIntersection& f) { return f.codim == 2; });
        o.require(codim2 == 2, "codimension-2 gluings = " + std::to_string(codim2));
    });

    std::cout << (failures ? "FAILED " : "ALL PASSED ") << 10 - failures << "/10" << std::endl;
    return failures ? 1 : 0;
}
