#ifndef ENRIQUES_MORPHISM_HPP
#define ENRIQUES_MORPHISM_HPP

#include <optional>
#include <set>
#include <vector>

#include "enriques/graph.hpp"

namespace enriques {

// Vertex bijection preserving weights, kinds, node counts and edges with
// multiplicity. Candidate labels may permute; the C vertex is fixed by kind.
struct GraphMorphism {
    std::vector<std::size_t> map;  // domain index -> codomain index

    bool is_identity() const {
        for (std::size_t i = 0; i < map.size(); ++i)
            if (map[i] != i) return false;
        return true;
    }
};

// All self-bijections. Always contains the identity; closed under
// composition and inverse. Graphs are expected to stay small (<= 64).
std::vector<GraphMorphism> automorphisms(const WeightedCurveGraph& g);

std::optional<GraphMorphism> find_isomorphism(const WeightedCurveGraph& a,
                                              const WeightedCurveGraph& b);

// Image of a candidate-label set under an automorphism of g.
std::set<int> apply_to_labels(const WeightedCurveGraph& g, const GraphMorphism& m,
                              const std::set<int>& labels);

} // namespace enriques

#endif
