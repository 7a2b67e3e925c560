#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "powerpath/graph.hpp"

namespace powerpath {

// Per-query limit. Exhausting it raises ResourceError; a verdict is never guessed.
struct SearchBudget {
    std::optional<std::chrono::milliseconds> timeout;
};

// mapping[x] is the host vertex that pattern vertex x lands on.
struct Embedding {
    std::vector<Vertex> mapping;
};

// True iff `e` is injective and maps every pattern edge onto a host edge.
bool is_embedding(const AdjacencyView& host, const AdjacencyView& pattern, const Embedding& e);

// Non-induced subgraph containment by backtracking over bitset candidate sets.
std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern, const SearchBudget& budget = {});

// As contains_subgraph, restricted to embeddings whose image contains `anchor`.
std::optional<Embedding> contains_subgraph_through(const AdjacencyView& host, const Graph& pattern, Vertex anchor,
                                                   const SearchBudget& budget = {});

// Same verdict as contains_subgraph(host, path_power(k, p)); mapping[i] is the
// host vertex at position i of the underlying path. Searches vertex sequences
// whose every window of p+1 consecutive vertices is a clique.
std::optional<Embedding> contains_path_power(const Graph& host, std::size_t k, std::size_t p,
                                             const SearchBudget& budget = {});
std::optional<Embedding> contains_path_power_through(const AdjacencyView& host, std::size_t k, std::size_t p,
                                                     Vertex anchor, const SearchBudget& budget = {});

// Maximum matching size (Edmonds' blossom algorithm).
std::size_t max_matching_size(const Graph& g);

// True iff disjoint A, B with |A| = a, |B| = b and every A-B pair adjacent exist.
bool contains_complete_bipartite(const Graph& g, std::size_t a, std::size_t b);

// Maximum number of vertex-disjoint copies of K_q.
std::size_t count_disjoint_cliques(const Graph& g, std::size_t q);

}  // namespace powerpath
