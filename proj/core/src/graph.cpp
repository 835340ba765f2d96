#include "enriques/graph.hpp"

#include <algorithm>
#include <set>

namespace {

std::pair<std::size_t, std::size_t> edge_key(std::size_t a, std::size_t b) {
    return {std::min(a, b), std::max(a, b)};
}

} // namespace

namespace enriques {

const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::CurveC: return "curveC";
        case VertexKind::Exceptional: return "exceptional";
        case VertexKind::Candidate: return "candidate";
        case VertexKind::Witness: return "witness";
    }
    return "?";
}

const char* to_string(PoolTag p) {
    switch (p) {
        case PoolTag::None: return "none";
        case PoolTag::T1: return "T1";
        case PoolTag::T2: return "T2";
        case PoolTag::T3: return "T3";
    }
    return "?";
}

std::size_t WeightedCurveGraph::add_vertex(CurveVertex v) {
    if (v.id.empty()) throw Error("graph: vertex id must be nonempty");
    if (index_.count(v.id)) throw Error("graph: duplicate vertex id '" + v.id + "'");
    if (v.nodes != 0 && v.kind != VertexKind::CurveC)
        throw Error("graph: vertex '" + v.id + "': only the C curve may carry nodes");
    vertices_.push_back(std::move(v));
    index_[vertices_.back().id] = vertices_.size() - 1;
    return vertices_.size() - 1;
}

void WeightedCurveGraph::add_edge(const std::string& a, const std::string& b, int multiplicity) {
    add_edge(require(a), require(b), multiplicity);
}

void WeightedCurveGraph::add_edge(std::size_t a, std::size_t b, int multiplicity) {
    if (a >= size() || b >= size()) throw Error("graph: edge endpoint out of range");
    if (a == b) throw Error("graph: self-loop at '" + vertices_[a].id + "'");
    if (multiplicity < 1) throw Error("graph: edge multiplicity must be >= 1");
    edges_[edge_key(a, b)] += multiplicity;
}

std::optional<std::size_t> WeightedCurveGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t WeightedCurveGraph::require(const std::string& id) const {
    auto i = index_of(id);
    if (!i) throw Error("graph: unknown vertex id '" + id + "'");
    return *i;
}

int WeightedCurveGraph::multiplicity(std::size_t a, std::size_t b) const {
    auto it = edges_.find(edge_key(a, b));
    return it == edges_.end() ? 0 : it->second;
}

std::vector<std::pair<std::size_t, int>> WeightedCurveGraph::neighbors(std::size_t v) const {
    std::vector<std::pair<std::size_t, int>> out;
    for (const auto& [e, m] : edges_) {
        if (e.first == v) out.emplace_back(e.second, m);
        else if (e.second == v) out.emplace_back(e.first, m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> WeightedCurveGraph::curve_c() const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].kind == VertexKind::CurveC) return i;
    return std::nullopt;
}

std::vector<std::size_t> WeightedCurveGraph::candidates() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].kind == VertexKind::Candidate) out.push_back(i);
    return out;
}

std::optional<std::size_t> WeightedCurveGraph::candidate_by_label(int label) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].kind == VertexKind::Candidate && vertices_[i].label == label)
            return i;
    return std::nullopt;
}

void WeightedCurveGraph::check_invariants() const {
    std::size_t c_count = 0;
    std::set<int> labels;
    for (const auto& v : vertices_) {
        if (v.kind == VertexKind::CurveC) ++c_count;
        if (v.kind == VertexKind::Candidate) {
            if (v.label <= 0)
                throw Error("graph: candidate '" + v.id + "' needs a positive label");
            if (!labels.insert(v.label).second)
                throw Error("graph: duplicate candidate label " + std::to_string(v.label));
        } else {
            if (v.label != 0)
                throw Error("graph: non-candidate '" + v.id + "' carries a label");
            if (v.pool != PoolTag::None)
                throw Error("graph: non-candidate '" + v.id + "' carries a pool tag");
        }
        if (v.nodes < 0) throw Error("graph: negative node count on '" + v.id + "'");
    }
    if (c_count > 1) throw Error("graph: more than one C vertex");
}

SymMatrix intersection_matrix(const WeightedCurveGraph& g,
                              const std::vector<std::size_t>& subset) {
    if (subset.empty()) throw Error("intersection_matrix: empty subset");
    SymMatrix m(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= g.size()) throw Error("intersection_matrix: unknown vertex");
        m.set(i, i, Rational(g.vertex(subset[i]).weight));
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            m.set(i, j, Rational(g.multiplicity(subset[i], subset[j])));
    }
    return m;
}

std::vector<std::vector<std::size_t>> connected_components(
    const WeightedCurveGraph& g, const std::vector<std::size_t>& subset) {
    std::vector<std::vector<std::size_t>> comps;
    std::set<std::size_t> todo(subset.begin(), subset.end());
    while (!todo.empty()) {
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{*todo.begin()};
        todo.erase(todo.begin());
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& [u, m] : g.neighbors(v)) {
                (void)m;
                auto it = todo.find(u);
                if (it != todo.end()) {
                    todo.erase(it);
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

namespace {

std::string fresh_id(const WeightedCurveGraph& g, const std::string& stem) {
    for (int i = 1;; ++i) {
        std::string id = stem + std::to_string(i);
        if (!g.index_of(id)) return id;
    }
}

} // namespace

BlowUp blow_up_edge(const WeightedCurveGraph& g, std::size_t a, std::size_t b,
                    CurveVertex seed) {
    if (g.multiplicity(a, b) < 1) throw Error("blow_up_edge: missing edge");
    WeightedCurveGraph out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        CurveVertex v = g.vertex(i);
        if (i == a || i == b) --v.weight;
        out.add_vertex(std::move(v));
    }
    if (seed.id.empty()) seed.id = fresh_id(g, "bu");
    seed.weight = -1;
    const std::size_t nv = out.add_vertex(std::move(seed));
    for (const auto& [e, m] : g.edges()) {
        const int keep = (e == edge_key(a, b)) ? m - 1 : m;
        if (keep > 0) out.add_edge(e.first, e.second, keep);
    }
    out.add_edge(a, nv, 1);
    out.add_edge(b, nv, 1);
    return {std::move(out), nv};
}

WeightedCurveGraph blow_down(const WeightedCurveGraph& g, std::size_t v) {
    if (v >= g.size()) throw Error("blow_down: unknown vertex");
    if (g.vertex(v).weight != -1)
        throw Error("blow_down: vertex '" + g.vertex(v).id + "' has weight != -1");
    const auto nbrs = g.neighbors(v);
    if (nbrs.size() > 2)
        throw Error("blow_down: vertex '" + g.vertex(v).id + "' has more than two neighbors");
    for (const auto& [u, m] : nbrs) {
        (void)u;
        if (m != 1)
            throw Error("blow_down: vertex '" + g.vertex(v).id +
                        "' meets a neighbor with multiplicity > 1");
    }

    WeightedCurveGraph out;
    std::vector<std::size_t> remap(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == v) continue;
        CurveVertex w = g.vertex(i);
        for (const auto& [u, m] : nbrs)
            if (u == i) { (void)m; ++w.weight; }
        remap[i] = out.add_vertex(std::move(w));
    }
    for (const auto& [e, m] : g.edges()) {
        if (e.first == v || e.second == v) continue;
        out.add_edge(remap[e.first], remap[e.second], m);
    }
    if (nbrs.size() == 2) out.add_edge(remap[nbrs[0].first], remap[nbrs[1].first], 1);
    return out;
}

BlowUp resolve_node(const WeightedCurveGraph& g, CurveVertex seed) {
    const auto c = g.curve_c();
    if (!c) throw Error("resolve_node: graph has no C vertex");
    if (g.vertex(*c).nodes < 1) throw Error("resolve_node: C has no node");
    WeightedCurveGraph out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        CurveVertex v = g.vertex(i);
        if (i == *c) {
            v.weight -= 4;
            v.nodes -= 1;
        }
        out.add_vertex(std::move(v));
    }
    if (seed.id.empty()) seed.id = fresh_id(g, "nd");
    seed.weight = -1;
    const std::size_t nv = out.add_vertex(std::move(seed));
    for (const auto& [e, m] : g.edges()) out.add_edge(e.first, e.second, m);
    out.add_edge(*c, nv, 2);
    return {std::move(out), nv};
}

} // namespace enriques
