#ifndef ENRIQUES_GRAPH_HPP
#define ENRIQUES_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enriques/linalg.hpp"
#include "enriques/rational.hpp"

namespace enriques {

enum class VertexKind { CurveC, Exceptional, Candidate, Witness };
enum class PoolTag { None, T1, T2, T3 };

const char* to_string(VertexKind k);
const char* to_string(PoolTag p);

// One curve of a configuration. All curves are smooth rational except that
// the distinguished C vertex may carry `nodes` ordinary double points
// (minimal-resolution diagrams draw C before its node is resolved).
// K.v = 2*nodes - 2 - weight.
struct CurveVertex {
    std::string id;
    int weight = 0;
    VertexKind kind = VertexKind::Exceptional;
    int label = 0;        // candidate enumeration number, 0 otherwise
    PoolTag pool = PoolTag::None;
    int nodes = 0;        // CurveC only

    Rational k_dot() const { return Rational(2 * nodes - 2 - weight); }
};

// Vertices keep insertion order; every matrix or listing derived from a
// graph is deterministic in that order. Edges are an unordered-pair multiset.
class WeightedCurveGraph {
public:
    std::size_t add_vertex(CurveVertex v);
    void add_edge(const std::string& a, const std::string& b, int multiplicity = 1);
    void add_edge(std::size_t a, std::size_t b, int multiplicity = 1);

    std::size_t size() const { return vertices_.size(); }
    const CurveVertex& vertex(std::size_t i) const { return vertices_[i]; }
    CurveVertex& vertex_mut(std::size_t i) { return vertices_[i]; }
    const std::vector<CurveVertex>& vertices() const { return vertices_; }

    std::optional<std::size_t> index_of(const std::string& id) const;
    std::size_t require(const std::string& id) const;

    int multiplicity(std::size_t a, std::size_t b) const;
    // Pairs (neighbor, multiplicity) in index order.
    std::vector<std::pair<std::size_t, int>> neighbors(std::size_t v) const;
    const std::map<std::pair<std::size_t, std::size_t>, int>& edges() const { return edges_; }

    std::optional<std::size_t> curve_c() const;
    std::vector<std::size_t> candidates() const;
    std::optional<std::size_t> candidate_by_label(int label) const;

    // Structural invariants: unique ids, no self-loops, at most one C,
    // distinct candidate labels, pools only on candidates.
    void check_invariants() const;

private:
    std::vector<CurveVertex> vertices_;
    std::map<std::string, std::size_t> index_;
    std::map<std::pair<std::size_t, std::size_t>, int> edges_;
};

// Intersection matrix of the induced subgraph: diagonal = self-intersections,
// off-diagonal = edge multiplicities. Order follows `subset`.
SymMatrix intersection_matrix(const WeightedCurveGraph& g,
                              const std::vector<std::size_t>& subset);

std::vector<std::vector<std::size_t>> connected_components(
    const WeightedCurveGraph& g, const std::vector<std::size_t>& subset);

struct BlowUp {
    WeightedCurveGraph graph;
    std::size_t new_vertex;
};

// Blow up one intersection point of edge (a,b): a fresh (-1)-vertex meets
// both endpoints once, the endpoints each drop by 1, the multiplicity of
// (a,b) drops by 1.
BlowUp blow_up_edge(const WeightedCurveGraph& g, std::size_t a, std::size_t b,
                    CurveVertex seed = {});

// Inverse of blow_up_edge. Errors when the configuration is not of that
// shape (weight != -1, more than two neighbors, or multiplicity > 1).
WeightedCurveGraph blow_down(const WeightedCurveGraph& g, std::size_t v);

// Blow up one node of the C vertex: a fresh (-1)-vertex meeting C twice,
// C drops by 4 and loses one node.
BlowUp resolve_node(const WeightedCurveGraph& g, CurveVertex seed = {});

} // namespace enriques

#endif
