#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "powerpath/graph.hpp"

namespace powerpath {

// A generated graph together with the named vertex sets it was built from and
// the integer parameters that produced it. Non-empty roles partition V(graph).
struct LabeledConstruction {
    std::string family;
    Graph graph;
    std::map<std::string, std::vector<Vertex>> roles;
    std::map<std::string, std::int64_t> parameters;

    // True iff the roles are pairwise disjoint and cover every vertex.
    bool roles_partition_vertices() const;
    // Number of edges with both ends in `a` (a == b) or with one end in each.
    std::size_t edges_between(const std::string& a, const std::string& b) const;
};

// s = 2*floor(k/(p+1)) + j, where j = 1 iff k = p (mod p+1); t = floor(k/(p+1)).
struct SParameter {
    std::int64_t s = 0;
    std::int64_t j = 0;
    std::int64_t t = 0;

    friend bool operator==(const SParameter&, const SParameter&) = default;
};

SParameter s_parameter(std::int64_t k, std::int64_t p);

// T(n,p) with the larger classes first; roles "class-1".."class-p" (empty classes omitted).
LabeledConstruction turan_graph(std::size_t n, std::size_t p);
std::int64_t turan_edge_count(std::int64_t n, std::int64_t p);

// H(n,k,a): A (a vertices) joined to B (n-k+a vertices), A u C complete, |C| = k-2a.
LabeledConstruction h_graph(std::int64_t n, std::int64_t k, std::int64_t a);
std::int64_t h_value(std::int64_t n, std::int64_t k, std::int64_t a);

// All extremal graphs for P_k on n vertices, n = (k-1)t + r with 0 <= r <= k-2:
//   index 0:      t K_{k-1} u K_r
//   index 1 + s:  (t-s-1) K_{k-1} u (K_{(k-2)/2} join empty(k/2 + s(k-1) + r)), s = 0..t-1,
//                 present only for even k with r in {k/2, (k-2)/2}.
// k = 2 gives the edgeless graph. Accepts k >= 2.
std::vector<LabeledConstruction> path_extremal_graphs(std::int64_t n, std::int64_t k);

// G0 join T(n-n0, p-1), where G0 = path_extremal_graphs(n0, s)[variant].
// For s < 2 only n0 = 0 is feasible (P_s-free graphs have no vertices).
LabeledConstruction power_extremal_candidate(std::int64_t n, std::int64_t k, std::int64_t p, std::int64_t n0,
                                             std::size_t variant);

// Every candidate attaining the maximum, pairwise non-isomorphic (n <= 64).
std::vector<LabeledConstruction> power_extremal_family(std::int64_t n, std::int64_t k, std::int64_t p);

// G^1 join ... join G^p with G^1, G^2 perfect matchings on 2l vertices and the
// rest independent sets of size 2l, l = ceil(k/(p+1)).
LabeledConstruction lemma31_witness(std::int64_t k, std::int64_t p);

enum class Lemma32Case {
    a,   // P_{s-1} in class 1 and one edge in class 2
    b1,  // s even: t-1 extra vertices plus one edge at their common neighbourhood
    b2,  // s odd: t-1 extra vertices plus two disjoint edges at their common neighbourhood,
         // or a P_3 when t = 1 and there are no extra vertices
};

// Classes have k+4 vertices each. Case b1 needs even s and b2 odd s;
// the mismatched parity raises ParameterError.
LabeledConstruction lemma32_witness(std::int64_t k, std::int64_t p, Lemma32Case which);

// K_{k-1} plus one vertex adjacent to exactly p-1 clique vertices.
LabeledConstruction section4_graph(std::int64_t k, std::int64_t p);

}  // namespace powerpath
