#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "bruhat/orders.hpp"
#include "bruhat/partition.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/polyring.hpp"
#include "bruhat/schubert.hpp"
#include "bruhat/verify.hpp"

using namespace bruhat;
using Json = nlohmann::ordered_json;

namespace {

enum class Format { Text, Json, Dot };

struct Options {
    Format format = Format::Text;
};

// Exit code for a verification that ran and found counterexamples.
constexpr int kCheckFailed = 3;

struct CheckFailed {};

Permutation perm_arg(const std::string& name, const std::string& text) {
    try {
        return parse_permutation(text);
    } catch (const DomainError& e) {
        throw DomainError("argument " + name + " '" + text + "': " + e.what());
    }
}

Partition partition_arg(const std::string& name, const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const DomainError& e) {
        throw DomainError("argument " + name + " '" + text + "': " + e.what());
    }
}

std::vector<int> int_list(const std::string& name, const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    int pos = 0;
    while (std::getline(ss, tok, ',')) {
        ++pos;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size())
            throw DomainError("argument " + name + " '" + text + "': malformed entry '" + tok + "' at position " +
                              std::to_string(pos));
        out.push_back(v);
    }
    if (out.empty()) throw DomainError("argument " + name + " is empty");
    return out;
}

std::string padded(const Permutation& w, int n) {
    return to_string(w, std::max(n, w.size()));
}

Json expansion_json(const SchubertExpansion& e) {
    Json terms = Json::object();
    for (const auto& [w, c] : e.coeffs()) terms[to_string(w)] = c;
    return terms;
}

void print_json(Json body) {
    Json j;
    j["schema"] = "1";
    for (auto& [key, value] : body.items()) j[key] = value;
    std::cout << j.dump(2) << "\n";
}

std::string words_text(const std::vector<std::vector<int>>& words) {
    std::string out;
    for (const auto& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + std::to_string(w[i]);
        out += "\n";
    }
    return out;
}

std::vector<std::function<VerificationReport()>> checks_for(const std::string& check, int n, std::uint64_t seed,
                                                            int samples) {
    using Suite = std::function<VerificationReport()>;
    std::vector<Suite> out;
    const auto add = [&](std::initializer_list<Suite> s) { out.insert(out.end(), s); };
    const bool all = check == "all";
    if (all || check == "A") add({[=] { return verify_theorem_A(n); }, [=] { return verify_index_sets(n); }});
    if (all || check == "B") add({[=] { return verify_theorem_B(samples, seed); }});
    if (all || check == "C") add({[=] { return verify_theorem_C(n); }});
    if (all || check == "D") add({[=] { return verify_theorem_D(n); }});
    if (all || check == "sym") add({[=] { return verify_symmetries(n); }});
    if (all || check == "chains")
        add({[=] { return verify_prop_chains(n); },
             [=] { return verify_theorem_chains_random(n, samples, seed); },
             [=] { return verify_skew_shape_prime(n); }});
    if (all || check == "prop")
        add({[=] { return verify_pieri(n); }, [=] { return verify_hook_law(n); },
             [=] { return verify_product_dualities(n); }, [=] { return verify_v_times_w(std::max(n / 2, 1)); },
             [=] { return verify_basis_round_trip(n); }, [=] { return verify_leading_code(n); },
             [=] { return verify_diagonal_word(samples, seed); }, [=] { return verify_hook_formula(n + 2); },
             [=] { return verify_braid_relations(samples, seed); }});
    if (all || check == "subst") add({[=] { return verify_substitution_all(n, {1, 3}); }});
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert polynomials and Bruhat-order combinatorics"};
    app.require_subcommand(1);
    Options opt;
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}};
    app.add_option("--format", opt.format, "text, json or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");
    app.fallthrough();

    std::function<void()> action;
    const auto json_or_text = [&](const std::string& text, Json body) {
        if (opt.format == Format::Json) print_json(std::move(body));
        else std::cout << text << "\n";
    };
    const auto no_dot = [&](const std::string& cmd) {
        if (opt.format == Format::Dot) throw CLI::ValidationError("--format", "dot is only available for interval, not " + cmd);
    };

    std::string a, b, c;

    auto* schubert = app.add_subcommand("schubert", "print the Schubert polynomial of a permutation");
    schubert->add_option("perm", a)->required();
    schubert->callback([&] {
        action = [&] {
            no_dot("schubert");
            const Permutation w = perm_arg("perm", a);
            const auto& f = schubert_poly(w);
            json_or_text(to_string(f), {{"permutation", to_string(w)}, {"polynomial", to_string(f)}});
        };
    });

    auto* expand = app.add_subcommand("expand", "expand a polynomial in the Schubert basis");
    expand->add_option("polynomial", a)->required();
    expand->callback([&] {
        action = [&] {
            no_dot("expand");
            const auto e = expand_in_schubert_basis(parse_polynomial(a));
            std::string text = e.str();
            if (!text.empty() && text.back() == '\n') text.pop_back();
            json_or_text(text, {{"expansion", expansion_json(e)}});
        };
    });

    auto* coeff = app.add_subcommand("coeff", "structure constant c^w_{u,v}");
    coeff->add_option("u", a)->required();
    coeff->add_option("v", b)->required();
    coeff->add_option("w", c)->required();
    coeff->callback([&] {
        action = [&] {
            no_dot("coeff");
            const Permutation u = perm_arg("u", a), v = perm_arg("v", b), w = perm_arg("w", c);
            const Coeff x = structure_constant(u, v, w);
            json_or_text(std::to_string(x), {{"u", to_string(u)}, {"v", to_string(v)}, {"w", to_string(w)}, {"coefficient", x}});
        };
    });

    auto* lrc = app.add_subcommand("lrc", "coefficient c^zeta_lambda of a permutation zeta");
    lrc->add_option("zeta", a)->required();
    lrc->add_option("lambda", b)->required();
    lrc->callback([&] {
        action = [&] {
            no_dot("lrc");
            const Permutation z = perm_arg("zeta", a);
            const Partition lam = partition_arg("lambda", b);
            const Coeff x = lr_coeff_perm(z, lam);
            json_or_text(std::to_string(x), {{"zeta", cycle_string(z)}, {"lambda", lam.str()}, {"coefficient", x}});
        };
    });

    int k = 0;
    bool words = false;
    auto* interval = app.add_subcommand("interval", "print the k-Bruhat interval [u,w]_k");
    interval->add_option("--k", k)->required();
    interval->add_option("u", a)->required();
    interval->add_option("w", b)->required();
    interval->callback([&] {
        action = [&] {
            const auto I = interval_k(perm_arg("u", a), perm_arg("w", b), k);
            if (opt.format == Format::Dot) {
                std::cout << dot_export(I);
                return;
            }
            if (opt.format == Format::Json) {
                std::cout << interval_json(I) << "\n";
                return;
            }
            const int n = std::max(I.top.size(), I.bottom.size());
            for (const auto& v : I.vertices) std::cout << I.rank.at(v) << " " << padded(v, n) << "\n";
            for (const auto& cv : I.covers)
                std::cout << padded(cv.lower, n) << " -> " << padded(cv.upper, n) << " [" << cv.label << "]\n";
        };
    });

    auto* chains = app.add_subcommand("chains", "count maximal chains of [u,w]_k");
    chains->add_option("--k", k)->required();
    chains->add_flag("--words", words, "list the label word of every chain");
    chains->add_option("u", a)->required();
    chains->add_option("w", b)->required();
    chains->callback([&] {
        action = [&] {
            no_dot("chains");
            const auto I = interval_k(perm_arg("u", a), perm_arg("w", b), k);
            const Coeff count = count_maximal_chains(I);
            Json body{{"chains", count}};
            std::string text = std::to_string(count);
            if (words) {
                const auto ws = chain_words(I);
                body["words"] = ws;
                text += "\n" + words_text(ws);
                text.pop_back();
            }
            json_or_text(text, body);
        };
    });

    std::string set;
    auto* coloured = app.add_subcommand("coloured", "coloured chain count f^w_u(P)");
    coloured->add_option("--I", set, "excluded generators, e.g. 2,3")->required();
    coloured->add_option("u", a)->required();
    coloured->add_option("w", b)->required();
    coloured->callback([&] {
        action = [&] {
            no_dot("coloured");
            const auto I = int_list("--I", set);
            const Coeff x = coloured_chain_count(perm_arg("u", a), perm_arg("w", b), I);
            json_or_text(std::to_string(x), {{"I", I}, {"count", x}});
        };
    });

    int p = 0;
    auto* psi_p_cmd = app.add_subcommand("psi-p", "substitute x_p = 0 and expand");
    psi_p_cmd->add_option("--p", p)->required()->check(CLI::PositiveNumber);
    psi_p_cmd->add_option("perm", a)->required();
    psi_p_cmd->callback([&] {
        action = [&] {
            no_dot("psi-p");
            const auto e = psi_p(perm_arg("perm", a), p);
            std::string text = e.str();
            if (!text.empty() && text.back() == '\n') text.pop_back();
            json_or_text(text, {{"p", p}, {"expansion", expansion_json(e)}});
        };
    });

    int bound = 0;
    auto* psi_big = app.add_subcommand("psi-P", "send the variables indexed by P to y, the rest to z, and expand");
    psi_big->add_option("--set", set, "the set P, e.g. 1,3,5")->required();
    psi_big->add_option("--n", bound, "number of variables substituted (default: size of perm)");
    psi_big->add_option("perm", a)->required();
    psi_big->callback([&] {
        action = [&] {
            no_dot("psi-P");
            const Permutation w = perm_arg("perm", a);
            const auto P = int_list("--set", set);
            const auto e = psi_P_expand(w, P, bound > 0 ? bound : std::max(w.size(), 1));
            Json terms = Json::array();
            for (const auto& [key, x] : e.coeffs())
                terms.push_back({{"u", to_string(key.first)}, {"v", to_string(key.second)}, {"coefficient", x}});
            std::string text = e.str();
            if (!text.empty() && text.back() == '\n') text.pop_back();
            json_or_text(text, {{"P", P}, {"terms", terms}});
        };
    });

    int n = 4;
    auto* census = app.add_subcommand("census", "count skew partitions, their shape class and skew permutations in S_n");
    census->add_option("--n", n)->check(CLI::Range(1, 6));
    census->callback([&] {
        action = [&] {
            no_dot("census");
            const auto cc = skew_census(n);
            std::ostringstream t;
            t << cc.skew_partitions << " " << cc.shape_equivalent << " " << cc.skew_permutations;
            json_or_text(t.str(), {{"n", n},
                                   {"skew_partitions", cc.skew_partitions},
                                   {"shape_equivalent", cc.shape_equivalent},
                                   {"skew_permutations", cc.skew_permutations}});
        };
    });

    std::string check = "all";
    std::uint64_t seed = 20261019;
    int samples = 50;
    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("--check", check)
        ->check(CLI::IsMember({"A", "B", "C", "D", "sym", "chains", "prop", "subst", "all"}));
    verify->add_option("--n", n)->check(CLI::Range(1, 6));
    verify->add_option("--seed", seed);
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify->callback([&] {
        action = [&] {
            no_dot("verify");
            bool ok = true;
            Json reports = Json::array();
            for (const auto& run : checks_for(check, n, seed, samples)) {
                const auto rep = run();
                ok &= rep.passed();
                if (opt.format == Format::Json) reports.push_back(Json::parse(rep.json()));
                else std::cout << rep.text() << "\n";
            }
            if (opt.format == Format::Json) print_json({{"passed", ok}, {"reports", reports}});
            if (!ok) throw CheckFailed{};
        };
    });

    auto* complex = app.add_subcommand("complex", "maximal simplices of the order complex of the proper part of [u,w]_k");
    complex->add_option("--k", k)->required();
    complex->add_option("u", a)->required();
    complex->add_option("w", b)->required();
    complex->callback([&] {
        action = [&] {
            no_dot("complex");
            const auto I = interval_k(perm_arg("u", a), perm_arg("w", b), k);
            const int width = std::max(I.top.size(), I.bottom.size());
            const auto cx = order_complex_proper(I);
            Json facets = Json::array(), glue = Json::array();
            std::string text;
            for (const auto& f : cx.facets) {
                Json row = Json::array();
                std::string line;
                for (const auto& v : f) {
                    row.push_back(padded(v, width));
                    line += (line.empty() ? "" : " ") + padded(v, width);
                }
                facets.push_back(row);
                text += "{" + line + "}\n";
            }
            for (const auto& g : cx.intersections) {
                glue.push_back({{"first", g.first}, {"second", g.second}, {"shared", g.shared}, {"codim", g.codim}});
                text += "facets " + std::to_string(g.first) + "," + std::to_string(g.second) + " share " +
                        std::to_string(g.shared) + " vertices, codimension " + std::to_string(g.codim) + "\n";
            }
            if (!text.empty()) text.pop_back();
            json_or_text(text, {{"facets", facets}, {"intersections", glue}});
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CheckFailed&) {
        std::cerr << "verification failed\n";
        return kCheckFailed;
    }
    return 0;
}
