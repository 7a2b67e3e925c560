#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace powerpath {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Process-wide hard cap on graph order. Default 512.
std::size_t order_cap() noexcept;
void set_order_cap(std::size_t cap) noexcept;

// Read-only view of a square bit matrix: row v occupies `words` 64-bit words
// starting at bits + v * words; bit u of row v is set iff u ~ v.
struct AdjacencyView {
    const std::uint64_t* bits = nullptr;
    std::size_t order = 0;
    std::size_t words = 0;

    std::span<const std::uint64_t> row(Vertex v) const noexcept { return {bits + v * words, words}; }
    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (bits[u * words + (v >> 6)] >> (v & 63)) & 1u;
    }
};

// Undirected simple graph on vertices 0..order-1, stored as fixed-width bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    static Graph empty(std::size_t n) { return Graph(n); }
    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return order_; }
    std::size_t edge_count() const noexcept { return edges_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool has_edge(Vertex u, Vertex v) const;
    // Both are idempotent; loops and out-of-range ids raise InputError.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::size_t degree(Vertex v) const;
    std::size_t min_degree() const noexcept;
    std::size_t max_degree() const noexcept;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::vector<Edge> edges() const;

    std::span<const std::uint64_t> row(Vertex v) const { return {bits_.data() + v * words_, words_}; }
    AdjacencyView view() const noexcept { return {bits_.data(), order_, words_}; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::size_t order_ = 0;
    std::size_t words_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Ordered list of disjoint, non-empty vertex sets covering 0..order-1.
class VertexPartition {
public:
    VertexPartition() = default;
    // Validates the partition invariants; throws InputError when violated.
    VertexPartition(std::size_t order, std::vector<std::vector<Vertex>> parts);

    std::size_t order() const noexcept { return order_; }
    std::size_t size() const noexcept { return parts_.size(); }
    const std::vector<Vertex>& part(std::size_t i) const { return parts_.at(i); }
    const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }

private:
    std::size_t order_ = 0;
    std::vector<std::vector<Vertex>> parts_;
};

struct PartitionedGraph {
    Graph graph;
    VertexPartition partition;
};

// Parts are laid out consecutively in list order. Zero-size parts are rejected.
PartitionedGraph complete_multipartite(std::span<const std::size_t> part_sizes);

// The second operand's vertices are relabeled to follow the first operand's.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph copies(std::size_t count, const Graph& g);
Graph complement(const Graph& g);

// i ~ j iff 0 < |i - j| <= p. For k <= p + 1 this is K_k.
Graph path_power(std::size_t k, std::size_t p);

// Vertex i of the result is xs[i]; duplicates or out-of-range ids raise InputError.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> xs);

// Relabels so that vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace powerpath
