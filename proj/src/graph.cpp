#include "powerpath/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>

#include "powerpath/errors.hpp"

namespace powerpath {

namespace {

std::atomic<std::size_t> g_order_cap{512};

void require_order(std::size_t n) {
    if (n > order_cap()) {
        throw SizeError("graph order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap()));
    }
}

}  // namespace

std::size_t order_cap() noexcept { return g_order_cap.load(std::memory_order_relaxed); }
void set_order_cap(std::size_t cap) noexcept { g_order_cap.store(cap, std::memory_order_relaxed); }

Graph::Graph(std::size_t order) : order_(order), words_((order + 63) / 64) {
    require_order(order);
    bits_.assign(order_ * words_, 0);
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph Graph::path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph Graph::cycle(std::size_t n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v >= order_) {
        throw InputError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return view().adjacent(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (view().adjacent(u, v)) return;
    bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !view().adjacent(u, v)) return;
    bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --edges_;
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Graph::min_degree() const noexcept {
    std::size_t best = order_ == 0 ? 0 : order_;
    for (Vertex v = 0; v < order_; ++v) best = std::min(best, degree(v));
    return best;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (Vertex v = 0; v < order_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < order_; ++u) {
        if (view().adjacent(v, u)) out.push_back(u);
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < order_; ++u) {
        for (Vertex v = u + 1; v < order_; ++v) {
            if (view().adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexPartition::VertexPartition(std::size_t order, std::vector<std::vector<Vertex>> parts)
    : order_(order), parts_(std::move(parts)) {
    std::vector<bool> seen(order_, false);
    std::size_t covered = 0;
    for (const auto& part : parts_) {
        if (part.empty()) throw InputError("partition has an empty part");
        for (Vertex v : part) {
            if (v >= order_) throw InputError("partition vertex " + std::to_string(v) + " out of range");
            if (seen[v]) throw InputError("partition parts overlap at vertex " + std::to_string(v));
            seen[v] = true;
            ++covered;
        }
    }
    if (covered != order_) throw InputError("partition does not cover every vertex");
}

PartitionedGraph complete_multipartite(std::span<const std::size_t> part_sizes) {
    if (part_sizes.empty()) throw ParameterError("complete_multipartite needs at least one part");
    std::size_t total = 0;
    for (auto s : part_sizes) {
        if (s == 0) throw ParameterError("complete_multipartite part sizes must be positive");
        total += s;
    }
    require_order(total);
    Graph g(total);
    std::vector<std::vector<Vertex>> parts;
    std::vector<std::size_t> part_of(total);
    Vertex next = 0;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) {
        auto& part = parts.emplace_back();
        for (std::size_t j = 0; j < part_sizes[i]; ++j) {
            part_of[next] = i;
            part.push_back(next++);
        }
    }
    for (Vertex u = 0; u < total; ++u) {
        for (Vertex v = u + 1; v < total; ++v) {
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
        }
    }
    return {std::move(g), VertexPartition(total, std::move(parts))};
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    require_order(g.order() + h.order());
    Graph out(g.order() + h.order());
    const auto shift = static_cast<Vertex>(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    const auto shift = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, v + shift);
    }
    return out;
}

Graph copies(std::size_t count, const Graph& g) {
    if (count == 0) throw ParameterError("copies needs a positive count");
    require_order(count * g.order());
    Graph out(count * g.order());
    const auto edges = g.edges();
    for (std::size_t c = 0; c < count; ++c) {
        const auto shift = static_cast<Vertex>(c * g.order());
        for (auto [u, v] : edges) out.add_edge(u + shift, v + shift);
    }
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.view().adjacent(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

Graph path_power(std::size_t k, std::size_t p) {
    if (k == 0 || p == 0) throw ParameterError("path_power needs k >= 1 and p >= 1");
    Graph g(k);
    for (Vertex i = 0; i < k; ++i) {
        for (Vertex j = i + 1; j < k && j - i <= p; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> xs) {
    std::vector<bool> seen(g.order(), false);
    for (Vertex x : xs) {
        if (x >= g.order()) throw InputError("induced_subgraph vertex " + std::to_string(x) + " out of range");
        if (seen[x]) throw InputError("induced_subgraph vertex " + std::to_string(x) + " repeated");
        seen[x] = true;
    }
    Graph out(xs.size());
    for (Vertex i = 0; i < xs.size(); ++i) {
        for (Vertex j = i + 1; j < xs.size(); ++j) {
            if (g.view().adjacent(xs[i], xs[j])) out.add_edge(i, j);
        }
    }
    return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw InputError("relabel permutation has the wrong length");
    std::vector<bool> seen(g.order(), false);
    for (Vertex v : perm) {
        if (v >= g.order() || seen[v]) throw InputError("relabel argument is not a permutation");
        seen[v] = true;
    }
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace powerpath
