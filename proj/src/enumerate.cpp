#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "powerpath/detail/augment.hpp"
#include "powerpath/detail/canon.hpp"
#include "powerpath/errors.hpp"
#include "powerpath/oracle.hpp"

namespace powerpath {

namespace detail {

namespace {

using Word = std::uint64_t;

SmallGraph delete_vertex(const SmallGraph& g, Vertex w) {
    SmallGraph out;
    out.n = g.n - 1;
    out.edges = g.edges - g.degree(w);
    const Word low = (Word{1} << w) - 1;
    for (Vertex v = 0, i = 0; v < g.n; ++v) {
        if (v == w) continue;
        const Word row = g.rows[v];
        out.rows[i++] = (row & low) | ((row >> 1) & ~low);
    }
    return out;
}

Word apply(const std::vector<Vertex>& gamma, Word mask) {
    Word out = 0;
    for (Word rest = mask; rest; rest &= rest - 1) out |= Word{1} << gamma[std::countr_zero(rest)];
    return out;
}

// Next mask with the same popcount (Gosper's hack).
Word next_same_popcount(Word x) {
    const Word c = x & (~x + 1);
    const Word r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

void expand(const AugmentNode& node, const AugmentHooks& hooks) {
    if (node.graph.n == hooks.target) {
        hooks.leaf(node);
        return;
    }
    for (const auto& child : augment_children(node, hooks)) expand(child, hooks);
}

}  // namespace

std::size_t SmallGraph::degree(Vertex v) const noexcept { return static_cast<std::size_t>(std::popcount(rows[v])); }

Graph SmallGraph::to_graph() const {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Word rest = rows[u] & ~((Word{2} << u) - 1); rest; rest &= rest - 1) {
            g.add_edge(u, static_cast<Vertex>(std::countr_zero(rest)));
        }
    }
    return g;
}

AugmentNode make_node(const SmallGraph& g) {
    auto canon = canonicalize(std::span<const Word>(g.rows.data(), g.n), g.n);
    return {g, std::move(canon.rows), std::move(canon.automorphisms)};
}

std::vector<AugmentNode> augment_children(const AugmentNode& parent, const AugmentHooks& hooks) {
    const SmallGraph& g = parent.graph;
    const std::size_t m = g.n;
    if (m + 1 > kSmallOrderCap) throw SizeError("augmentation beyond order " + std::to_string(kSmallOrderCap));
    std::size_t min_deg = m;
    for (Vertex v = 0; v < m; ++v) min_deg = std::min(min_deg, g.degree(v));
    const std::size_t hi = m == 0 ? 0 : std::min(m, min_deg + 1);

    std::vector<bool> seen;
    if (!parent.automorphisms.empty()) seen.assign(std::size_t{1} << m, false);

    std::vector<AugmentNode> out;
    std::set<std::vector<Word>> accepted;
    const auto new_vertex = static_cast<Vertex>(m);
    for (std::size_t size = hi + 1; size-- > 0;) {
        if (hooks.viable && !hooks.viable(m + 1, g.edges + size)) break;
        const Word limit = Word{1} << m;
        for (Word mask = size == 0 ? 0 : (Word{1} << size) - 1; mask < limit || (m == 0 && mask == 0);
             mask = next_same_popcount(mask)) {
            if (!seen.empty()) {
                if (seen[mask]) {
                    if (size == 0) break;
                    continue;
                }
                // Mark the orbit of mask under the parent's known automorphisms.
                std::vector<Word> stack{mask};
                seen[mask] = true;
                while (!stack.empty()) {
                    const Word cur = stack.back();
                    stack.pop_back();
                    for (const auto& gamma : parent.automorphisms) {
                        const Word img = apply(gamma, cur);
                        if (!seen[img]) {
                            seen[img] = true;
                            stack.push_back(img);
                        }
                    }
                }
            }
            bool min_degree_ok = true;
            for (Vertex u = 0; u < m && min_degree_ok; ++u) {
                const std::size_t d = g.degree(u) + ((mask >> u) & 1);
                if (d < size) min_degree_ok = false;
            }
            if (min_degree_ok) {
                SmallGraph child = g;
                child.n = m + 1;
                child.edges = g.edges + size;
                child.rows[new_vertex] = mask;
                for (Word rest = mask; rest; rest &= rest - 1) child.rows[std::countr_zero(rest)] |= Word{1} << m;
                if (!hooks.admit || hooks.admit(child, new_vertex)) {
                    auto canon = canonicalize(std::span<const Word>(child.rows.data(), child.n), child.n);
                    // Canonical deletion vertex: minimum degree, earliest canonical position.
                    Vertex w = canon.vertex_at[0];
                    std::size_t w_deg = child.n;
                    for (Vertex v : canon.vertex_at) {
                        if (child.degree(v) < w_deg) {
                            w = v;
                            w_deg = child.degree(v);
                        }
                    }
                    bool accept = w == new_vertex;
                    if (!accept && child.degree(new_vertex) == w_deg) {
                        const SmallGraph reduced = delete_vertex(child, w);
                        accept = canonicalize(std::span<const Word>(reduced.rows.data(), reduced.n), reduced.n).rows ==
                                 parent.canon_rows;
                    }
                    if (accept && accepted.insert(canon.rows).second) {
                        out.push_back({child, std::move(canon.rows), std::move(canon.automorphisms)});
                    }
                }
            }
            if (size == 0) break;
        }
    }
    return out;
}

void run_augmentation(const AugmentHooks& hooks, std::size_t workers) {
    if (hooks.target > kSmallOrderCap) throw SizeError("augmentation beyond order " + std::to_string(kSmallOrderCap));
    const AugmentNode root = make_node(SmallGraph{});
    if (workers <= 1 || hooks.target < 4) {
        expand(root, hooks);
        return;
    }
    // Breadth-first down to a level with enough independent subtrees, then fan out.
    std::deque<AugmentNode> frontier{root};
    const std::size_t split = hooks.target - 2;
    std::size_t level = 0;
    while (level < split && frontier.size() < workers * 16) {
        std::deque<AugmentNode> next;
        for (const auto& node : frontier) {
            for (auto& child : augment_children(node, hooks)) next.push_back(std::move(child));
        }
        frontier = std::move(next);
        ++level;
    }
    std::vector<AugmentNode> jobs(std::make_move_iterator(frontier.begin()), std::make_move_iterator(frontier.end()));
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = cursor++; i < jobs.size(); i = cursor++) expand(jobs[i], hooks);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                cursor = jobs.size();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

void enumerate_graphs(std::size_t n, const GraphVisitor& visit, std::size_t workers) {
    if (n > kOracleOrderCap) {
        throw SizeError("enumerate_graphs supports n <= " + std::to_string(kOracleOrderCap) + ", got " + std::to_string(n));
    }
    std::mutex visit_mutex;
    detail::AugmentHooks hooks;
    hooks.target = n;
    hooks.leaf = [&](const detail::AugmentNode& node) {
        const Graph g = node.graph.to_graph();
        std::lock_guard lock(visit_mutex);
        visit(g);
    };
    detail::run_augmentation(hooks, workers);
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
    std::vector<Graph> out;
    enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace powerpath
