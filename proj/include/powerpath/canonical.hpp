#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "powerpath/graph.hpp"

namespace powerpath {

// Largest order accepted by canonical labeling and isomorphism testing.
inline constexpr std::size_t kCanonicalOrderCap = 64;

// Labeling-independent encoding of an isomorphism class: the graph6 text of
// the canonically relabeled graph. Equal iff the graphs are isomorphic.
struct CanonicalForm {
    std::string encoding;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    // vertex_at[i] is the vertex of the input placed at canonical position i.
    std::vector<Vertex> vertex_at;
    Graph canonical_graph;
    // Automorphisms found during the search, as maps v -> gamma(v). They
    // generate a subgroup of Aut(G); orbit pruning only relies on soundness.
    std::vector<std::vector<Vertex>> automorphisms;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace powerpath
