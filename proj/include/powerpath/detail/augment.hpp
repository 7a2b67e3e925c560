#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "powerpath/graph.hpp"

namespace powerpath::detail {

inline constexpr std::size_t kSmallOrderCap = 16;

// Fixed-capacity graph for the exhaustive searches; row v is a 64-bit mask.
struct SmallGraph {
    std::size_t n = 0;
    std::size_t edges = 0;
    std::array<std::uint64_t, kSmallOrderCap> rows{};

    AdjacencyView view() const noexcept { return {rows.data(), n, 1}; }
    std::size_t degree(Vertex v) const noexcept;
    Graph to_graph() const;
};

struct AugmentNode {
    SmallGraph graph;
    std::vector<std::uint64_t> canon_rows;
    std::vector<std::vector<Vertex>> automorphisms;
};

// Canonical augmentation by one vertex at a time. The canonical deletion
// vertex is the minimum-degree vertex that comes first in canonical order, so
// every ancestor of a graph is at least as dense as the graph itself.
struct AugmentHooks {
    std::size_t target = 0;
    // Hereditary filter on a child; `added` is the new vertex. Empty = accept all.
    std::function<bool(const SmallGraph&, Vertex added)> admit;
    // False drops a node of the given order and edge count together with its
    // subtree; must be monotone in the edge count. Empty = keep all.
    std::function<bool(std::size_t order, std::size_t edges)> viable;
    // Called once per isomorphism class at the target order.
    std::function<void(const AugmentNode&)> leaf;
};

AugmentNode make_node(const SmallGraph& g);
std::vector<AugmentNode> augment_children(const AugmentNode& parent, const AugmentHooks& hooks);
// Runs the whole tree; leaf may be called concurrently when workers > 1.
void run_augmentation(const AugmentHooks& hooks, std::size_t workers);

}  // namespace powerpath::detail
