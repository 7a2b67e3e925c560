#pragma once

// Brute-force reference implementations. Deliberately naive: each one walks
// the whole search space so it shares no logic with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "powerpath/graph.hpp"

namespace oracle {

using powerpath::Graph;
using powerpath::Vertex;

inline std::int64_t choose2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Labeled graph on n <= 8 vertices from the bits of `mask` over pairs (u<v) in
// lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

// Smallest pair mask over all relabelings: a complete isomorphism invariant.
inline std::uint64_t min_relabeled_mask(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        std::size_t bit = 0;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v, ++bit) {
                if (g.has_edge(perm[u], perm[v])) mask |= std::uint64_t{1} << bit;
            }
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    const auto edges = g.edges();
    do {
        bool ok = true;
        for (auto [u, v] : edges) {
            if (!h.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Number of isomorphism classes among all labeled graphs on n <= 6 vertices.
inline std::size_t class_count(std::size_t n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        seen.insert(min_relabeled_mask(graph_from_mask(n, mask)));
    }
    return seen.size();
}

namespace detail {

inline bool extend(const Graph& host, const Graph& pattern, std::vector<Vertex>& map, std::vector<bool>& used) {
    const auto x = static_cast<Vertex>(map.size());
    if (x == pattern.order()) return true;
    for (Vertex v = 0; v < host.order(); ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (Vertex y = 0; y < x && ok; ++y) {
            if (pattern.has_edge(x, y) && !host.has_edge(v, map[y])) ok = false;
        }
        if (!ok) continue;
        used[v] = true;
        map.push_back(v);
        if (extend(host, pattern, map, used)) return true;
        map.pop_back();
        used[v] = false;
    }
    return false;
}

}  // namespace detail

// Plain injective-map enumeration in pattern vertex order, no pruning beyond
// checking the edges to already placed vertices.
inline bool contains(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return false;
    std::vector<Vertex> map;
    std::vector<bool> used(host.order(), false);
    return detail::extend(host, pattern, map, used);
}

inline std::size_t max_matching(const Graph& g) {
    const auto edges = g.edges();
    std::size_t best = 0;
    std::vector<bool> used(g.order(), false);
    auto go = [&](auto&& self, std::size_t i, std::size_t size) -> void {
        best = std::max(best, size);
        if (size + (edges.size() - i) <= best) return;
        for (std::size_t j = i; j < edges.size(); ++j) {
            auto [u, v] = edges[j];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = true;
            self(self, j + 1, size + 1);
            used[u] = used[v] = false;
        }
    };
    go(go, 0, 0);
    return best;
}

inline std::size_t chromatic(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return 0;
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> color(n, 0);
        while (true) {
            bool proper = true;
            for (auto [u, v] : g.edges()) {
                if (color[u] == color[v]) {
                    proper = false;
                    break;
                }
            }
            if (proper) return k;
            std::size_t i = 0;
            while (i < n && ++color[i] == k) color[i++] = 0;
            if (i == n) break;
        }
    }
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (!g.has_edge(xs[i], xs[j])) return false;
        }
    }
    return true;
}

// Every vertex subset of size a+b, split every way.
inline bool contains_complete_bipartite(const Graph& g, std::size_t a, std::size_t b) {
    const std::size_t n = g.order();
    if (a + b > n) return false;
    for (std::uint32_t amask = 0; amask < (1u << n); ++amask) {
        if (static_cast<std::size_t>(__builtin_popcount(amask)) != a) continue;
        std::size_t common = 0;
        for (Vertex v = 0; v < n; ++v) {
            if ((amask >> v) & 1) continue;
            bool all = true;
            for (Vertex u = 0; u < n && all; ++u) {
                if (((amask >> u) & 1) && !g.has_edge(u, v)) all = false;
            }
            common += all;
        }
        if (common >= b) return true;
    }
    return false;
}

inline std::size_t disjoint_cliques(const Graph& g, std::size_t q) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (static_cast<std::size_t>(__builtin_popcount(m)) != q) continue;
        std::vector<Vertex> xs;
        for (Vertex v = 0; v < n; ++v) {
            if ((m >> v) & 1) xs.push_back(v);
        }
        if (is_clique(g, xs)) cliques.push_back(m);
    }
    std::size_t best = 0;
    auto go = [&](auto&& self, std::size_t i, std::uint32_t used, std::size_t count) -> void {
        best = std::max(best, count);
        for (std::size_t j = i; j < cliques.size(); ++j) {
            if (cliques[j] & used) continue;
            self(self, j + 1, used | cliques[j], count + 1);
        }
    };
    go(go, 0, 0, 0);
    return best;
}

// Independent re-derivations of the closed forms.
inline std::int64_t turan_edges(std::int64_t n, std::int64_t p) {
    std::vector<std::int64_t> parts(static_cast<std::size_t>(p), 0);
    for (std::int64_t i = 0; i < n; ++i) ++parts[static_cast<std::size_t>(i % p)];
    std::int64_t inside = 0;
    for (auto s : parts) inside += choose2(s);
    return choose2(n) - inside;
}

inline std::int64_t path_free(std::int64_t n, std::int64_t k) {
    // Greedy disjoint cliques of order k-1: each clique is P_k-free.
    std::int64_t total = 0;
    while (n >= k - 1) {
        total += choose2(k - 1);
        n -= k - 1;
    }
    return total + choose2(n);
}

}  // namespace oracle
