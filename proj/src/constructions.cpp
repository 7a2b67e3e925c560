#include "powerpath/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "powerpath/canonical.hpp"
#include "powerpath/errors.hpp"
#include "powerpath/formula.hpp"

namespace powerpath {

namespace {

std::int64_t choose2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

std::vector<Vertex> range_of(Vertex first, std::size_t count) {
    std::vector<Vertex> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = first + static_cast<Vertex>(i);
    return out;
}

void make_clique(Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    }
}

void join_sets(Graph& g, const std::vector<Vertex>& xs, const std::vector<Vertex>& ys) {
    for (Vertex x : xs) {
        for (Vertex y : ys) g.add_edge(x, y);
    }
}

std::string class_name(std::size_t i) { return "class-" + std::to_string(i + 1); }

// Class sizes of T(n,p): the n mod p larger classes first.
std::vector<std::size_t> turan_class_sizes(std::size_t n, std::size_t p) {
    std::vector<std::size_t> sizes(p, n / p);
    for (std::size_t i = 0; i < n % p; ++i) ++sizes[i];
    return sizes;
}

// Complete multipartite graph on consecutive classes starting at `first`.
std::vector<std::vector<Vertex>> lay_out_classes(Graph& g, Vertex first, const std::vector<std::size_t>& sizes) {
    std::vector<std::vector<Vertex>> classes;
    Vertex next = first;
    for (auto size : sizes) {
        classes.push_back(range_of(next, size));
        next += static_cast<Vertex>(size);
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) join_sets(g, classes[i], classes[j]);
    }
    return classes;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ParameterError(message);
}

}  // namespace

bool LabeledConstruction::roles_partition_vertices() const {
    std::vector<int> hits(graph.order(), 0);
    for (const auto& [name, vs] : roles) {
        for (Vertex v : vs) {
            if (v >= graph.order()) return false;
            ++hits[v];
        }
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::size_t LabeledConstruction::edges_between(const std::string& a, const std::string& b) const {
    const auto& xs = roles.at(a);
    const auto& ys = roles.at(b);
    std::size_t count = 0;
    if (a == b) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = i + 1; j < xs.size(); ++j) count += graph.has_edge(xs[i], xs[j]);
        }
        return count;
    }
    for (Vertex x : xs) {
        for (Vertex y : ys) count += graph.has_edge(x, y);
    }
    return count;
}

SParameter s_parameter(std::int64_t k, std::int64_t p) {
    require(k >= 1 && p >= 1, "s_parameter needs k >= 1 and p >= 1");
    SParameter out;
    out.t = k / (p + 1);
    out.j = (k % (p + 1) == p) ? 1 : 0;
    out.s = 2 * out.t + out.j;
    return out;
}

std::int64_t turan_edge_count(std::int64_t n, std::int64_t p) {
    require(n >= 0 && p >= 1, "turan_edge_count needs n >= 0 and p >= 1");
    const std::int64_t q = n / p;
    const std::int64_t r = n % p;
    return choose2(n) - r * choose2(q + 1) - (p - r) * choose2(q);
}

LabeledConstruction turan_graph(std::size_t n, std::size_t p) {
    require(p >= 1, "turan_graph needs p >= 1");
    LabeledConstruction out;
    out.family = "turan";
    out.graph = Graph(n);
    const auto classes = lay_out_classes(out.graph, 0, turan_class_sizes(n, p));
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!classes[i].empty()) out.roles[class_name(i)] = classes[i];
    }
    out.parameters = {{"n", static_cast<std::int64_t>(n)}, {"p", static_cast<std::int64_t>(p)}};
    return out;
}

std::int64_t h_value(std::int64_t n, std::int64_t k, std::int64_t a) {
    require(a >= 1 && k - 2 * a >= 0 && n - k + a >= 0,
            "H(n,k,a) needs a >= 1, k - 2a >= 0 and n - k + a >= 0 (got n=" + std::to_string(n) +
                ", k=" + std::to_string(k) + ", a=" + std::to_string(a) + ")");
    return choose2(k - a) + a * (n - k + a);
}

LabeledConstruction h_graph(std::int64_t n, std::int64_t k, std::int64_t a) {
    h_value(n, k, a);
    LabeledConstruction out;
    out.family = "h";
    out.graph = Graph(static_cast<std::size_t>(n));
    const auto A = range_of(0, static_cast<std::size_t>(a));
    const auto B = range_of(static_cast<Vertex>(a), static_cast<std::size_t>(n - k + a));
    const auto C = range_of(static_cast<Vertex>(n - k + 2 * a), static_cast<std::size_t>(k - 2 * a));
    join_sets(out.graph, A, B);
    std::vector<Vertex> ac = A;
    ac.insert(ac.end(), C.begin(), C.end());
    make_clique(out.graph, ac);
    out.roles["A"] = A;
    if (!B.empty()) out.roles["B"] = B;
    if (!C.empty()) out.roles["C"] = C;
    out.parameters = {{"n", n}, {"k", k}, {"a", a}};
    return out;
}

std::vector<LabeledConstruction> path_extremal_graphs(std::int64_t n, std::int64_t k) {
    require(k >= 2 && n >= 0, "path_extremal_graphs needs k >= 2 and n >= 0");
    const std::int64_t t = n / (k - 1);
    const std::int64_t r = n % (k - 1);
    std::vector<LabeledConstruction> out;

    {
        LabeledConstruction g;
        g.family = "path-extremal";
        g.graph = Graph(static_cast<std::size_t>(n));
        Vertex next = 0;
        for (std::int64_t c = 0; c < t; ++c) {
            auto clique = range_of(next, static_cast<std::size_t>(k - 1));
            make_clique(g.graph, clique);
            g.roles["clique-" + std::to_string(c + 1)] = clique;
            next += static_cast<Vertex>(k - 1);
        }
        if (r > 0) {
            auto rest = range_of(next, static_cast<std::size_t>(r));
            make_clique(g.graph, rest);
            g.roles["remainder"] = rest;
        }
        g.parameters = {{"n", n}, {"k", k}, {"t", t}, {"r", r}, {"variant", 0}};
        out.push_back(std::move(g));
    }

    if (k % 2 == 0 && (r == k / 2 || r == (k - 2) / 2)) {
        const std::int64_t hub = (k - 2) / 2;
        for (std::int64_t s = 0; s <= t - 1; ++s) {
            const std::int64_t leaves = k / 2 + s * (k - 1) + r;
            const std::int64_t cliques = t - s - 1;
            if (cliques * (k - 1) + hub + leaves != n) {
                throw ParameterError("path_extremal_graphs: second family order mismatch at s=" + std::to_string(s));
            }
            LabeledConstruction g;
            g.family = "path-extremal";
            g.graph = Graph(static_cast<std::size_t>(n));
            Vertex next = 0;
            for (std::int64_t c = 0; c < cliques; ++c) {
                auto clique = range_of(next, static_cast<std::size_t>(k - 1));
                make_clique(g.graph, clique);
                g.roles["clique-" + std::to_string(c + 1)] = clique;
                next += static_cast<Vertex>(k - 1);
            }
            auto hub_set = range_of(next, static_cast<std::size_t>(hub));
            next += static_cast<Vertex>(hub);
            auto leaf_set = range_of(next, static_cast<std::size_t>(leaves));
            make_clique(g.graph, hub_set);
            join_sets(g.graph, hub_set, leaf_set);
            if (!hub_set.empty()) g.roles["hub"] = hub_set;
            if (!leaf_set.empty()) g.roles["leaves"] = leaf_set;
            g.parameters = {{"n", n}, {"k", k}, {"t", t}, {"r", r}, {"s", s}, {"variant", s + 1}};
            out.push_back(std::move(g));
        }
    }
    return out;
}

LabeledConstruction power_extremal_candidate(std::int64_t n, std::int64_t k, std::int64_t p, std::int64_t n0,
                                             std::size_t variant) {
    require(p >= 2, "power_extremal_candidate needs p >= 2");
    require(k >= 1 && n >= 0 && n0 >= 0 && n0 <= n, "power_extremal_candidate needs k >= 1 and 0 <= n0 <= n");
    const auto sp = s_parameter(k, p);
    Graph g0;
    std::map<std::string, std::vector<Vertex>> g0_roles;
    if (sp.s < 2) {
        require(n0 == 0, "no P_" + std::to_string(sp.s) + "-free graph has " + std::to_string(n0) + " vertices");
        require(variant == 0, "variant index out of range");
    } else {
        auto variants = path_extremal_graphs(n0, sp.s);
        require(variant < variants.size(), "variant index " + std::to_string(variant) + " out of range (" +
                                               std::to_string(variants.size()) + " variants)");
        g0 = std::move(variants[variant].graph);
    }
    const std::int64_t n1 = n - n0;
    LabeledConstruction out;
    out.family = "power-extremal";
    out.graph = Graph(static_cast<std::size_t>(n));
    for (auto [u, v] : g0.edges()) out.graph.add_edge(u, v);
    const auto g0_set = range_of(0, static_cast<std::size_t>(n0));
    auto classes = lay_out_classes(out.graph, static_cast<Vertex>(n0),
                                   turan_class_sizes(static_cast<std::size_t>(n1), static_cast<std::size_t>(p - 1)));
    for (const auto& cls : classes) join_sets(out.graph, g0_set, cls);
    if (!g0_set.empty()) out.roles["G0"] = g0_set;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!classes[i].empty()) out.roles[class_name(i)] = classes[i];
    }
    out.parameters = {{"n", n},   {"k", k},       {"p", p},
                      {"n0", n0}, {"n1", n1},     {"s", sp.s},
                      {"j", sp.j}, {"variant", static_cast<std::int64_t>(variant)}};
    return out;
}

std::vector<LabeledConstruction> power_extremal_family(std::int64_t n, std::int64_t k, std::int64_t p) {
    require(p >= 2, "power_extremal_family needs p >= 2");
    if (n > static_cast<std::int64_t>(kCanonicalOrderCap)) {
        throw SizeError("power_extremal_family deduplicates by canonical form; order <= " +
                        std::to_string(kCanonicalOrderCap) + " required");
    }
    const auto eval = power_path_turan_value(n, k, p);
    std::vector<LabeledConstruction> out;
    std::set<CanonicalForm> seen;
    for (auto n0 : eval.argmax_splits) {
        const std::size_t variants = eval.s_used.s < 2 ? 1 : path_extremal_graphs(n0, eval.s_used.s).size();
        for (std::size_t v = 0; v < variants; ++v) {
            auto candidate = power_extremal_candidate(n, k, p, n0, v);
            if (seen.insert(canonical_form(candidate.graph)).second) out.push_back(std::move(candidate));
        }
    }
    return out;
}

LabeledConstruction lemma31_witness(std::int64_t k, std::int64_t p) {
    require(p >= 2 && k >= 1, "lemma31_witness needs p >= 2 and k >= 1");
    const std::int64_t ell = (k + p) / (p + 1);
    const auto width = static_cast<std::size_t>(2 * ell);
    LabeledConstruction out;
    out.family = "lemma31";
    out.graph = Graph(width * static_cast<std::size_t>(p));
    const auto classes = lay_out_classes(out.graph, 0, std::vector<std::size_t>(static_cast<std::size_t>(p), width));
    for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t i = 0; i + 1 < width; i += 2) out.graph.add_edge(classes[c][i], classes[c][i + 1]);
    }
    for (std::size_t i = 0; i < classes.size(); ++i) out.roles[class_name(i)] = classes[i];
    out.parameters = {{"k", k}, {"p", p}, {"l", ell}};
    return out;
}

LabeledConstruction lemma32_witness(std::int64_t k, std::int64_t p, Lemma32Case which) {
    require(p >= 2 && k >= 1, "lemma32_witness needs p >= 2 and k >= 1");
    const auto sp = s_parameter(k, p);
    const bool even = sp.s % 2 == 0;
    if (which == Lemma32Case::b1) require(even, "case b1 needs even s (s=" + std::to_string(sp.s) + ")");
    if (which == Lemma32Case::b2) require(!even, "case b2 needs odd s (s=" + std::to_string(sp.s) + ")");
    const auto width = static_cast<std::size_t>(k + 4);
    const std::size_t extra = which == Lemma32Case::a ? 0 : static_cast<std::size_t>(std::max<std::int64_t>(sp.t - 1, 0));
    LabeledConstruction out;
    out.family = "lemma32";
    out.graph = Graph(width * static_cast<std::size_t>(p) + extra);
    const auto classes = lay_out_classes(out.graph, 0, std::vector<std::size_t>(static_cast<std::size_t>(p), width));
    const auto& first = classes[0];
    switch (which) {
        case Lemma32Case::a:
            for (std::int64_t i = 1; i + 1 <= sp.s - 1; ++i) out.graph.add_edge(first[i - 1], first[i]);
            out.graph.add_edge(classes[1][0], classes[1][1]);
            break;
        case Lemma32Case::b1:
            out.graph.add_edge(first[0], first[1]);
            break;
        case Lemma32Case::b2:
            // Without y-vertices two disjoint edges do not suffice (two disjoint
            // edges in one class of K_{9,9} hold no P_5^2), so use the P_3 form.
            out.graph.add_edge(first[0], first[1]);
            if (extra == 0) {
                out.graph.add_edge(first[1], first[2]);
            } else {
                out.graph.add_edge(first[2], first[3]);
            }
            break;
    }
    const auto ys = range_of(static_cast<Vertex>(width * static_cast<std::size_t>(p)), extra);
    for (const auto& cls : classes) join_sets(out.graph, ys, cls);
    for (std::size_t i = 0; i < classes.size(); ++i) out.roles[class_name(i)] = classes[i];
    if (!ys.empty()) out.roles["y"] = ys;
    const char* label = which == Lemma32Case::a ? "a" : which == Lemma32Case::b1 ? "b1" : "b2";
    out.family += std::string("-") + label;
    out.parameters = {{"k", k},
                      {"p", p},
                      {"s", sp.s},
                      {"t", sp.t},
                      {"class_size", static_cast<std::int64_t>(width)},
                      {"extra", static_cast<std::int64_t>(extra)},
                      {"incident_p3", which == Lemma32Case::b2 && extra == 0 ? 1 : 0}};
    return out;
}

LabeledConstruction section4_graph(std::int64_t k, std::int64_t p) {
    require(p >= 2 && k >= p + 1, "section4_graph needs k >= p + 1 >= 3");
    LabeledConstruction out;
    out.family = "section4";
    out.graph = Graph(static_cast<std::size_t>(k));
    const auto clique = range_of(0, static_cast<std::size_t>(k - 1));
    make_clique(out.graph, clique);
    const auto extra = static_cast<Vertex>(k - 1);
    for (std::int64_t i = 0; i < p - 1; ++i) out.graph.add_edge(extra, clique[static_cast<std::size_t>(i)]);
    out.roles["clique"] = clique;
    out.roles["extra"] = {extra};
    out.parameters = {{"k", k}, {"p", p}};
    return out;
}

}  // namespace powerpath
