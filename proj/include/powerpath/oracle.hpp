#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "powerpath/canonical.hpp"
#include "powerpath/containment.hpp"
#include "powerpath/graph.hpp"

namespace powerpath {

// Exhaustive searches refuse orders above this; the runtime grows by roughly
// an order of magnitude per extra vertex past it.
inline constexpr std::size_t kOracleOrderCap = 10;
inline constexpr std::size_t kChromaticOrderCap = 64;

struct OracleOptions {
    std::size_t workers = 1;
    // Applied to each individual containment query.
    SearchBudget budget;
};

// The forbidden graph together with the containment routine the searches use.
class ForbiddenPattern {
public:
    // Generic backtracking subgraph isomorphism.
    static ForbiddenPattern generic(Graph pattern);
    // Band search specialised to P_k^p.
    static ForbiddenPattern path_power(std::size_t k, std::size_t p);

    const Graph& graph() const noexcept { return graph_; }
    bool contained_in(const Graph& host, const SearchBudget& budget = {}) const;
    bool contained_through(const AdjacencyView& host, Vertex anchor, const SearchBudget& budget = {}) const;

private:
    Graph graph_;
    std::size_t k_ = 0;
    std::size_t p_ = 0;
    bool banded_ = false;
};

// One representative per isomorphism class of n-vertex graphs, produced by
// canonical augmentation. With workers == 1 the order is deterministic; with
// more workers the emitted multiset is unchanged and `visit` is serialised.
using GraphVisitor = std::function<void(const Graph&)>;
void enumerate_graphs(std::size_t n, const GraphVisitor& visit, std::size_t workers = 1);
std::vector<Graph> enumerate_graphs(std::size_t n);

struct ExtremalResult {
    std::size_t n = 0;
    Graph pattern;
    std::int64_t value = 0;
    // All extremal graphs up to isomorphism, sorted by encoding.
    std::vector<CanonicalForm> witnesses;
};

// Exact ex(n, pattern) with every extremal graph, for n <= kOracleOrderCap.
ExtremalResult extremal_number(std::size_t n, const ForbiddenPattern& pattern, const OracleOptions& options = {});
ExtremalResult extremal_number(std::size_t n, const Graph& pattern, const OracleOptions& options = {});

// Exact chromatic number by DSATUR branch and bound with a clique lower bound.
std::size_t chromatic_number(const Graph& g);

struct DecompositionFamily {
    Graph target;
    std::size_t p = 0;            // chi(target) - 1 host classes
    std::vector<Graph> members;   // minimal graphs, no isolated vertices, sorted by canonical form
    std::size_t host_width = 0;   // vertices per host class
    std::size_t candidate_cap = 0;
};

// True iff planting `m` on the first |m| vertices of class 1 of the complete
// p-partite graph with classes of size `width` creates a copy of `target`.
bool planting_creates(const ForbiddenPattern& target, std::size_t p, std::size_t width, const Graph& m,
                      const SearchBudget& budget = {});

// Host classes have |target| vertices: an embedding touches at most |target|
// host vertices, so wider classes admit no new embeddings.
DecompositionFamily decomposition_family(const Graph& target, std::optional<std::size_t> candidate_cap = std::nullopt,
                                         const SearchBudget& budget = {});
DecompositionFamily decomposition_family(const ForbiddenPattern& target,
                                         std::optional<std::size_t> candidate_cap = std::nullopt,
                                         const SearchBudget& budget = {});

}  // namespace powerpath
