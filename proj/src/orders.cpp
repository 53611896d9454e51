#include "bruhat/orders.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace bruhat {

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    const int n = std::max(u.size(), w.size());
    // r(i, j) = #{a <= i : x(a) >= j}
    std::vector<int> ru(n + 2, 0), rw(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= u(i); ++j) ++ru[j];
        for (int j = 1; j <= w(i); ++j) ++rw[j];
        for (int j = 1; j <= n; ++j)
            if (ru[j] > rw[j]) return false;
    }
    return true;
}

bool is_cover_swap(const Permutation& u, int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == b || u(a) > u(b)) return false;
    for (int c = a + 1; c < b; ++c)
        if (u(a) < u(c) && u(c) < u(b)) return false;
    return true;
}

std::vector<Permutation> bruhat_covers_up(const Permutation& u, int n) {
    std::vector<Permutation> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (is_cover_swap(u, a, b)) out.push_back(u.swap_positions(a, b));
    std::sort(out.begin(), out.end());
    return out;
}

bool k_bruhat_leq(const Permutation& u, const Permutation& w, int k) {
    if (k < 1) throw DomainError("k must be positive");
    const int n = std::max({u.size(), w.size(), k + 1});
    for (int a = 1; a <= n; ++a) {
        if (a <= k && u(a) > w(a)) return false;
        if (a > k && u(a) < w(a)) return false;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (u(a) < u(b) && w(a) > w(b) && !(a <= k && k < b)) return false;
    return true;
}

std::vector<std::pair<Permutation, int>> k_covers_up(const Permutation& u, int k, int n) {
    std::vector<std::pair<Permutation, int>> out;
    for (int a = 1; a <= k; ++a)
        for (int b = k + 1; b <= n; ++b)
            if (is_cover_swap(u, a, b)) out.emplace_back(u.swap_positions(a, b), u(b));
    return out;
}

ChainVariant parse_chain_variant(const std::string& name) {
    if (name == "min-umin") return ChainVariant::MinUmin;
    if (name == "max-wmax") return ChainVariant::MaxWmax;
    if (name == "reverse") return ChainVariant::Reverse;
    if (name == "conjugate") return ChainVariant::Conjugate;
    throw DomainError("unknown chain variant '" + name + "'");
}

std::string to_string(ChainVariant v) {
    switch (v) {
    case ChainVariant::MinUmin: return "min-umin";
    case ChainVariant::MaxWmax: return "max-wmax";
    case ChainVariant::Reverse: return "reverse";
    case ChainVariant::Conjugate: return "conjugate";
    }
    return "";
}

namespace {

std::vector<Permutation> min_umin(const Permutation& u, Permutation w, int k, int n) {
    std::vector<Permutation> out{w};
    while (u != w) {
        int a = 0;
        for (int i = 1; i <= k; ++i)
            if (u(i) < w(i) && (a == 0 || u(i) < u(a))) a = i;
        int b = 0;
        for (int j = k + 1; j <= n; ++j)
            if (w(j) < w(a) && w(a) <= u(j) && (b == 0 || u(j) > u(b))) b = j;
        if (a == 0 || b == 0) throw std::logic_error("chain algorithm could not choose a cover");
        w = w.swap_positions(a, b);
        out.push_back(w);
    }
    return out;
}

} // namespace

std::vector<Permutation> chain_algorithm(const Permutation& u, const Permutation& w, int k, ChainVariant variant) {
    if (!k_bruhat_leq(u, w, k))
        throw DomainError(to_string(u) + " is not below " + to_string(w) + " in the " + std::to_string(k) + "-Bruhat order");
    const int n = std::max({u.size(), w.size(), k + 1});
    const Permutation top = w0(n);
    std::vector<Permutation> chain;
    switch (variant) {
    case ChainVariant::MinUmin:
        return min_umin(u, w, k, n);
    case ChainVariant::MaxWmax:
        for (const auto& x : min_umin(top * w, top * u, k, n)) chain.push_back(top * x);
        std::reverse(chain.begin(), chain.end());
        return chain;
    case ChainVariant::Reverse:
        for (const auto& x : min_umin(w * top, u * top, n - k, n)) chain.push_back(x * top);
        std::reverse(chain.begin(), chain.end());
        return chain;
    case ChainVariant::Conjugate:
        for (const auto& x : min_umin(top * u * top, top * w * top, n - k, n)) chain.push_back(top * x * top);
        return chain;
    }
    return chain;
}

std::vector<Permutation> chain_algorithm_zeta(const Permutation& zeta) {
    std::vector<Permutation> out{zeta};
    Permutation z = zeta;
    while (!z.is_identity()) {
        int alpha = 0;
        for (int a = 1; a <= z.size(); ++a)
            if (a < z(a)) {
                alpha = a;
                break;
            }
        int beta = 0;
        for (int b = z.size(); b >= 1; --b)
            if (z(b) < z(alpha) && z(alpha) <= b) {
                beta = b;
                break;
            }
        if (alpha == 0 || beta == 0) throw std::logic_error("zeta chain algorithm could not choose a cover");
        z = z.swap_positions(alpha, beta);
        out.push_back(z);
    }
    return out;
}

int LabeledInterval::index_of(const Permutation& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v, [this](const Permutation& a, const Permutation& b) {
        int ra = rank.at(a), rb = rank.at(b);
        return ra != rb ? ra < rb : a < b;
    });
    if (it == vertices.end() || *it != v) return -1;
    return static_cast<int>(it - vertices.begin());
}

namespace {

void finish(LabeledInterval& I) {
    std::sort(I.vertices.begin(), I.vertices.end(), [&](const Permutation& a, const Permutation& b) {
        int ra = I.rank.at(a), rb = I.rank.at(b);
        return ra != rb ? ra < rb : a < b;
    });
    std::sort(I.covers.begin(), I.covers.end(), [&](const Cover& x, const Cover& y) {
        int ix = I.index_of(x.lower), iy = I.index_of(y.lower);
        if (ix != iy) return ix < iy;
        return I.index_of(x.upper) < I.index_of(y.upper);
    });
}

} // namespace

LabeledInterval interval_k(const Permutation& u, const Permutation& w, int k) {
    if (!k_bruhat_leq(u, w, k))
        throw DomainError(to_string(u) + " is not below " + to_string(w) + " in the " + std::to_string(k) + "-Bruhat order");
    const int n = std::max({u.size(), w.size(), k + 1});
    const int base = length(u);
    LabeledInterval I;
    I.bottom = u;
    I.top = w;
    std::deque<Permutation> queue{u};
    I.rank[u] = 0;
    I.vertices.push_back(u);
    while (!queue.empty()) {
        Permutation v = queue.front();
        queue.pop_front();
        for (auto& [t, label] : k_covers_up(v, k, n)) {
            if (!k_bruhat_leq(t, w, k)) continue;
            I.covers.push_back({v, t, label});
            if (I.rank.emplace(t, length(t) - base).second) {
                I.vertices.push_back(t);
                queue.push_back(t);
            }
        }
    }
    finish(I);
    return I;
}

bool preceq(const Permutation& eta, const Permutation& zeta) {
    const int n = std::max(eta.size(), zeta.size());
    for (int a = 1; a <= n; ++a) {
        if (a < eta(a) && eta(a) > zeta(a)) return false;
        if (a > eta(a) && eta(a) < zeta(a)) return false;
    }
    auto st = cycle_stats(zeta);
    for (const auto* set : {&st.up, &st.down})
        for (std::size_t i = 0; i < set->size(); ++i)
            for (std::size_t j = i + 1; j < set->size(); ++j) {
                int a = (*set)[i], b = (*set)[j];
                if (zeta(a) < zeta(b) && !(eta(a) < eta(b))) return false;
            }
    return true;
}

bool preceq_by_definition(const Permutation& eta, const Permutation& zeta, int n) {
    for (const auto& u : all_permutations(n)) {
        const Permutation eu = eta * u, zu = zeta * u;
        for (int k = 1; k <= n; ++k)
            if (k_bruhat_leq(u, zu, k) && k_bruhat_leq(u, eu, k) && k_bruhat_leq(eu, zu, k)) return true;
    }
    return false;
}

LabeledInterval interval_preceq(const Permutation& zeta) {
    const auto sup = support(zeta);
    const int window = sup.empty() ? 0 : sup.back();
    LabeledInterval I;
    I.bottom = Permutation();
    I.top = zeta;
    I.rank[I.bottom] = 0;
    I.vertices.push_back(I.bottom);
    std::deque<Permutation> queue{I.bottom};
    while (!queue.empty()) {
        Permutation eta = queue.front();
        queue.pop_front();
        const int r = rank_abs(eta);
        for (int a = 1; a <= window; ++a)
            for (int b = a + 1; b <= window; ++b) {
                Permutation cand = Permutation::transposition(a, b) * eta;
                if (rank_abs(cand) != r + 1 || !preceq(cand, zeta) || !preceq(eta, cand)) continue;
                I.covers.push_back({eta, cand, b});
                if (I.rank.emplace(cand, r + 1).second) {
                    I.vertices.push_back(cand);
                    queue.push_back(cand);
                }
            }
    }
    if (!I.rank.count(zeta)) throw std::logic_error("preceq interval does not reach its top");
    finish(I);
    return I;
}

Coeff count_maximal_chains(const LabeledInterval& I) {
    std::vector<Coeff> ways(I.vertices.size(), 0);
    std::vector<std::vector<int>> up(I.vertices.size());
    for (const auto& c : I.covers) up[I.index_of(c.lower)].push_back(I.index_of(c.upper));
    ways[I.index_of(I.bottom)] = 1;
    for (std::size_t i = 0; i < I.vertices.size(); ++i)
        for (int j : up[i]) ways[j] = checked_add(ways[j], ways[i]);
    return ways[I.index_of(I.top)];
}

namespace {

void chains_dfs(const LabeledInterval& I, const std::vector<std::vector<std::pair<int, int>>>& up, int v, int top,
                std::vector<int>& path, std::vector<int>& labels,
                const std::function<void(const std::vector<int>&, const std::vector<int>&)>& emit) {
    if (v == top) {
        emit(path, labels);
        return;
    }
    for (auto [t, label] : up[v]) {
        path.push_back(t);
        labels.push_back(label);
        chains_dfs(I, up, t, top, path, labels, emit);
        path.pop_back();
        labels.pop_back();
    }
}

void for_each_chain(const LabeledInterval& I,
                    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& emit) {
    std::vector<std::vector<std::pair<int, int>>> up(I.vertices.size());
    for (const auto& c : I.covers) up[I.index_of(c.lower)].emplace_back(I.index_of(c.upper), c.label);
    const int bottom = I.index_of(I.bottom);
    std::vector<int> path{bottom}, labels;
    chains_dfs(I, up, bottom, I.index_of(I.top), path, labels, emit);
}

} // namespace

std::vector<std::vector<Permutation>> maximal_chains(const LabeledInterval& I) {
    std::vector<std::vector<Permutation>> out;
    for_each_chain(I, [&](const std::vector<int>& path, const std::vector<int>&) {
        std::vector<Permutation> c;
        for (int i : path) c.push_back(I.vertices[i]);
        out.push_back(c);
    });
    return out;
}

std::vector<std::vector<int>> chain_words(const LabeledInterval& I) {
    std::vector<std::vector<int>> out;
    for_each_chain(I, [&](const std::vector<int>&, const std::vector<int>& labels) { out.push_back(labels); });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_labeled_isomorphism(const LabeledInterval& a, const LabeledInterval& b,
                            const std::function<Permutation(const Permutation&)>& phi, bool compare_labels) {
    if (a.vertices.size() != b.vertices.size() || a.covers.size() != b.covers.size()) return false;
    std::set<Permutation> image;
    for (const auto& v : a.vertices) {
        Permutation x = phi(v);
        if (b.index_of(x) < 0) return false;
        image.insert(x);
    }
    if (image.size() != a.vertices.size()) return false;
    std::map<std::pair<Permutation, Permutation>, int> cb;
    for (const auto& c : b.covers) cb[{c.lower, c.upper}] = c.label;
    for (const auto& c : a.covers) {
        auto it = cb.find({phi(c.lower), phi(c.upper)});
        if (it == cb.end() || (compare_labels && it->second != c.label)) return false;
    }
    return true;
}

namespace {

int colour_multiplicity(int a, int b, const std::vector<int>& I) {
    if (a > b) std::swap(a, b);
    int m = 0;
    for (int i : I) m += a <= i && i < b;
    return m;
}

} // namespace

bool p_bruhat_cover(const Permutation& u, const Permutation& w, const std::vector<int>& I) {
    const int n = std::max(u.size(), w.size());
    std::vector<int> diff;
    for (int i = 1; i <= n; ++i)
        if (u(i) != w(i)) diff.push_back(i);
    if (diff.size() != 2) return false;
    const int a = diff[0], b = diff[1];
    return u.swap_positions(a, b) == w && is_cover_swap(u, a, b) && colour_multiplicity(a, b, I) > 0;
}

Coeff coloured_chain_count(const Permutation& u, const Permutation& w, const std::vector<int>& I) {
    if (!bruhat_leq(u, w)) return 0;
    const int n = std::max(u.size(), w.size());
    const int target = length(w);
    std::map<Permutation, Coeff> layer{{u, 1}};
    for (int l = length(u); l < target; ++l) {
        std::map<Permutation, Coeff> next;
        for (const auto& [v, c] : layer)
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    if (!is_cover_swap(v, a, b)) continue;
                    const int m = colour_multiplicity(a, b, I);
                    if (m == 0) continue;
                    Permutation t = v.swap_positions(a, b);
                    if (!bruhat_leq(t, w)) continue;
                    auto& slot = next[t];
                    slot = checked_add(slot, checked_mul(c, m));
                }
        layer = std::move(next);
    }
    auto it = layer.find(w);
    return it == layer.end() ? 0 : it->second;
}

OrderComplex order_complex(const LabeledInterval& I, const std::function<bool(const Permutation&)>& keep) {
    OrderComplex K;
    std::set<std::vector<Permutation>> seen;
    for (const auto& chain : maximal_chains(I)) {
        std::vector<Permutation> f;
        for (const auto& v : chain)
            if (keep(v)) f.push_back(v);
        if (seen.insert(f).second) K.facets.push_back(f);
    }
    for (std::size_t i = 0; i < K.facets.size(); ++i)
        for (std::size_t j = i + 1; j < K.facets.size(); ++j) {
            std::set<Permutation> a(K.facets[i].begin(), K.facets[i].end());
            int shared = 0;
            for (const auto& v : K.facets[j]) shared += a.count(v);
            if (shared == 0) continue;
            const int size = static_cast<int>(std::max(K.facets[i].size(), K.facets[j].size()));
            K.intersections.push_back({static_cast<int>(i), static_cast<int>(j), shared, size - shared});
        }
    return K;
}

OrderComplex order_complex_proper(const LabeledInterval& I) {
    return order_complex(I, [&](const Permutation& v) { return v != I.bottom && v != I.top; });
}

std::string dot_export(const LabeledInterval& I) {
    std::ostringstream out;
    out << "digraph interval {\n  rankdir=BT;\n";
    for (const auto& v : I.vertices) out << "  \"" << to_string(v, I.top.size()) << "\";\n";
    for (const auto& c : I.covers)
        out << "  \"" << to_string(c.lower, I.top.size()) << "\" -> \"" << to_string(c.upper, I.top.size())
            << "\" [label=\"" << c.label << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string interval_json(const LabeledInterval& I) {
    const int n = std::max(I.top.size(), I.bottom.size());
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["bottom"] = to_string(I.bottom, n);
    j["top"] = to_string(I.top, n);
    j["vertices"] = nlohmann::ordered_json::array();
    nlohmann::ordered_json rank = nlohmann::ordered_json::object();
    for (const auto& v : I.vertices) {
        j["vertices"].push_back(to_string(v, n));
        rank[to_string(v, n)] = I.rank.at(v);
    }
    j["covers"] = nlohmann::ordered_json::array();
    for (const auto& c : I.covers)
        j["covers"].push_back({{"from", to_string(c.lower, n)}, {"to", to_string(c.upper, n)}, {"label", c.label}});
    j["rank"] = rank;
    return j.dump(2);
}

} // namespace bruhat
