#include "enriques/morphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace enriques {

namespace {

using Color = int;
using Signature = std::tuple<Color, int, int, int, std::vector<std::pair<Color, int>>>;

// Simultaneous color refinement of both graphs; colors are comparable
// across graphs because each round assigns them from one sorted signature
// table. Stops when the color count stabilizes.
std::pair<std::vector<Color>, std::vector<Color>> refine(const WeightedCurveGraph& a,
                                                         const WeightedCurveGraph& b) {
    std::vector<Color> ca(a.size(), 0), cb(b.size(), 0);
    std::size_t classes = 1;
    for (int round = 0; round < 64; ++round) {
        std::map<Signature, Color> table;
        auto signature = [&](const WeightedCurveGraph& g, const std::vector<Color>& c,
                             std::size_t v) {
            std::vector<std::pair<Color, int>> nb;
            for (const auto& [u, m] : g.neighbors(v)) nb.emplace_back(c[u], m);
            std::sort(nb.begin(), nb.end());
            const auto& vert = g.vertex(v);
            return Signature{c[v], static_cast<int>(vert.kind), vert.weight, vert.nodes,
                             std::move(nb)};
        };
        std::vector<Signature> sa, sb;
        sa.reserve(a.size());
        sb.reserve(b.size());
        for (std::size_t v = 0; v < a.size(); ++v) sa.push_back(signature(a, ca, v));
        for (std::size_t v = 0; v < b.size(); ++v) sb.push_back(signature(b, cb, v));
        for (const auto& s : sa) table.emplace(s, 0);
        for (const auto& s : sb) table.emplace(s, 0);
        Color next = 0;
        for (auto& [sig, col] : table) col = next++;
        for (std::size_t v = 0; v < a.size(); ++v) ca[v] = table.at(sa[v]);
        for (std::size_t v = 0; v < b.size(); ++v) cb[v] = table.at(sb[v]);
        if (table.size() == classes) break;
        classes = table.size();
    }
    return {std::move(ca), std::move(cb)};
}

struct Matcher {
    const WeightedCurveGraph& a;
    const WeightedCurveGraph& b;
    std::vector<Color> ca, cb;
    std::vector<std::size_t> order;          // domain vertices, most constrained first
    std::vector<std::size_t> map;            // partial map, SIZE_MAX = unset
    std::vector<bool> used;
    bool all = false;                        // collect all matches vs first
    std::vector<GraphMorphism> found;

    Matcher(const WeightedCurveGraph& a_, const WeightedCurveGraph& b_, bool all_)
        : a(a_), b(b_), all(all_) {
        auto cols = refine(a, b);
        ca = std::move(cols.first);
        cb = std::move(cols.second);
        order.resize(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) order[i] = i;
        std::map<Color, int> freq;
        for (auto c : ca) ++freq[c];
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return freq[ca[x]] < freq[ca[y]]; });
        map.assign(a.size(), static_cast<std::size_t>(-1));
        used.assign(b.size(), false);
    }

    bool compatible(std::size_t v, std::size_t w) const {
        if (ca[v] != cb[w]) return false;
        for (std::size_t u = 0; u < a.size(); ++u) {
            if (map[u] == static_cast<std::size_t>(-1)) continue;
            if (a.multiplicity(v, u) != b.multiplicity(w, map[u])) return false;
        }
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == order.size()) {
            found.push_back(GraphMorphism{map});
            return !all;
        }
        const std::size_t v = order[depth];
        for (std::size_t w = 0; w < b.size(); ++w) {
            if (used[w] || !compatible(v, w)) continue;
            map[v] = w;
            used[w] = true;
            if (search(depth + 1)) return true;
            used[w] = false;
            map[v] = static_cast<std::size_t>(-1);
        }
        return false;
    }
};

bool color_multisets_match(const std::vector<Color>& ca, const std::vector<Color>& cb) {
    std::vector<Color> x = ca, y = cb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

} // namespace

std::vector<GraphMorphism> automorphisms(const WeightedCurveGraph& g) {
    if (g.size() > 64) throw Error("automorphisms: graph too large");
    Matcher m(g, g, /*all=*/true);
    m.search(0);
    std::sort(m.found.begin(), m.found.end(),
              [](const GraphMorphism& x, const GraphMorphism& y) { return x.map < y.map; });
    return m.found;
}

std::optional<GraphMorphism> find_isomorphism(const WeightedCurveGraph& a,
                                              const WeightedCurveGraph& b) {
    if (a.size() > 64 || b.size() > 64) throw Error("find_isomorphism: graph too large");
    if (a.size() != b.size() || a.edges().size() != b.edges().size()) return std::nullopt;
    Matcher m(a, b, /*all=*/false);
    if (!color_multisets_match(m.ca, m.cb)) return std::nullopt;
    if (!m.search(0)) return std::nullopt;
    return m.found.front();
}

std::set<int> apply_to_labels(const WeightedCurveGraph& g, const GraphMorphism& m,
                              const std::set<int>& labels) {
    std::set<int> out;
    for (int l : labels) {
        const auto v = g.candidate_by_label(l);
        if (!v) throw Error("apply_to_labels: unknown candidate label " + std::to_string(l));
        out.insert(g.vertex(m.map[*v]).label);
    }
    return out;
}

} // namespace enriques
