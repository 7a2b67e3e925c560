#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <string>

#include "powerpath/detail/augment.hpp"
#include "powerpath/errors.hpp"
#include "powerpath/oracle.hpp"

namespace powerpath {

ForbiddenPattern ForbiddenPattern::generic(Graph pattern) {
    ForbiddenPattern out;
    out.graph_ = std::move(pattern);
    return out;
}

ForbiddenPattern ForbiddenPattern::path_power(std::size_t k, std::size_t p) {
    ForbiddenPattern out;
    out.graph_ = powerpath::path_power(k, p);
    out.k_ = k;
    out.p_ = p;
    out.banded_ = true;
    return out;
}

bool ForbiddenPattern::contained_in(const Graph& host, const SearchBudget& budget) const {
    if (banded_) return contains_path_power(host, k_, p_, budget).has_value();
    return contains_subgraph(host, graph_, budget).has_value();
}

bool ForbiddenPattern::contained_through(const AdjacencyView& host, Vertex anchor, const SearchBudget& budget) const {
    if (banded_) return contains_path_power_through(host, k_, p_, anchor, budget).has_value();
    return contains_subgraph_through(host, graph_, anchor, budget).has_value();
}

namespace {

// Random maximal pattern-free graphs; the best of a few gives the search a
// starting bound. Deterministic for a given n.
std::size_t greedy_lower_bound(std::size_t n, const ForbiddenPattern& pattern, const SearchBudget& budget) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::mt19937 rng(0x5eed + static_cast<unsigned>(n));
    std::size_t best = 0;
    for (int trial = 0; trial < 8; ++trial) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        Graph g(n);
        for (auto [u, v] : pairs) {
            g.add_edge(u, v);
            if (pattern.contained_through(g.view(), u, budget)) g.remove_edge(u, v);
        }
        best = std::max(best, g.edge_count());
    }
    return best;
}

}  // namespace

ExtremalResult extremal_number(std::size_t n, const ForbiddenPattern& pattern, const OracleOptions& options) {
    if (n > kOracleOrderCap) {
        throw SizeError("extremal_number supports n <= " + std::to_string(kOracleOrderCap) + ", got " + std::to_string(n));
    }
    const Graph& h = pattern.graph();
    if (h.edge_count() == 0 && h.order() <= n) {
        throw ParameterError("every graph on " + std::to_string(n) + " vertices contains an edgeless pattern of order " +
                             std::to_string(h.order()));
    }

    std::atomic<std::size_t> best{greedy_lower_bound(n, pattern, options.budget)};
    std::mutex witness_mutex;
    std::set<std::string> witnesses;
    std::size_t witness_value = 0;
    const auto full = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0);

    detail::AugmentHooks hooks;
    hooks.target = n;
    hooks.admit = [&](const detail::SmallGraph& g, Vertex added) {
        return !pattern.contained_through(g.view(), added, options.budget);
    };
    // Removing a minimum-degree vertex never lowers the density, so every
    // ancestor of an extremal graph is at least as dense as it is.
    hooks.viable = [&](std::size_t m, std::size_t e) {
        if (m < 2) return true;
        return static_cast<std::uint64_t>(e) * full >= static_cast<std::uint64_t>(best.load()) * m * (m - 1);
    };
    hooks.leaf = [&](const detail::AugmentNode& node) {
        const std::size_t e = node.graph.edges;
        std::size_t cur = best.load();
        while (e > cur && !best.compare_exchange_weak(cur, e)) {
        }
        if (e < best.load()) return;
        auto form = canonical_form(node.graph.to_graph());
        std::lock_guard lock(witness_mutex);
        if (e > witness_value || witnesses.empty()) {
            witnesses.clear();
            witness_value = e;
        }
        if (e == witness_value) witnesses.insert(std::move(form.encoding));
    };
    detail::run_augmentation(hooks, options.workers);

    ExtremalResult out;
    out.n = n;
    out.pattern = h;
    out.value = static_cast<std::int64_t>(witness_value);
    for (auto& w : witnesses) out.witnesses.push_back({w});
    return out;
}

ExtremalResult extremal_number(std::size_t n, const Graph& pattern, const OracleOptions& options) {
    return extremal_number(n, ForbiddenPattern::generic(pattern), options);
}

}  // namespace powerpath
