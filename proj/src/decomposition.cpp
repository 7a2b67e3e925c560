#include <algorithm>
#include <string>
#include <vector>

#include "powerpath/errors.hpp"
#include "powerpath/oracle.hpp"

namespace powerpath {

namespace {

Graph strip_isolated(const Graph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 0) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

}  // namespace

bool planting_creates(const ForbiddenPattern& target, std::size_t p, std::size_t width, const Graph& m,
                      const SearchBudget& budget) {
    if (p == 0 || width == 0) throw ParameterError("planting needs at least one non-empty host class");
    if (m.order() > width) {
        throw ParameterError("planted graph of order " + std::to_string(m.order()) + " exceeds class width " +
                             std::to_string(width));
    }
    const std::vector<std::size_t> sizes(p, width);
    Graph host = complete_multipartite(sizes).graph;
    for (auto [u, v] : m.edges()) host.add_edge(u, v);
    return target.contained_in(host, budget);
}

DecompositionFamily decomposition_family(const ForbiddenPattern& target, std::optional<std::size_t> candidate_cap,
                                         const SearchBudget& budget) {
    const Graph& l = target.graph();
    if (l.order() > kOracleOrderCap) {
        throw SizeError("decomposition_family supports targets of order <= " + std::to_string(kOracleOrderCap) +
                        ", got " + std::to_string(l.order()));
    }
    if (l.edge_count() == 0) throw ParameterError("decomposition host undefined for an edgeless target");
    const std::size_t cap = candidate_cap.value_or(l.order());
    if (cap > l.order()) {
        throw ParameterError("candidate cap " + std::to_string(cap) + " exceeds target order " +
                             std::to_string(l.order()));
    }

    DecompositionFamily out;
    out.target = l;
    out.p = chromatic_number(l) - 1;
    out.host_width = l.order();
    out.candidate_cap = cap;

    const auto creates = [&](const Graph& m) { return planting_creates(target, out.p, out.host_width, m, budget); };
    std::vector<std::pair<CanonicalForm, Graph>> found;
    for (std::size_t order = 2; order <= cap; ++order) {
        enumerate_graphs(order, [&](const Graph& m) {
            if (m.min_degree() == 0 || !creates(m)) return;
            for (auto [u, v] : m.edges()) {
                Graph smaller = m;
                smaller.remove_edge(u, v);
                if (creates(strip_isolated(smaller))) return;
            }
            found.emplace_back(canonical_form(m), m);
        });
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [form, m] : found) out.members.push_back(std::move(m));
    return out;
}

DecompositionFamily decomposition_family(const Graph& target, std::optional<std::size_t> candidate_cap,
                                         const SearchBudget& budget) {
    return decomposition_family(ForbiddenPattern::generic(target), candidate_cap, budget);
}

}  // namespace powerpath
