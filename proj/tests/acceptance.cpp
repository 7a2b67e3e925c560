// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [artifact-dir]
// The gap table lands in <artifact-dir>/gap_table.jsonl and gap_table.csv.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "powerpath/canonical.hpp"
#include "powerpath/constructions.hpp"
#include "powerpath/containment.hpp"
#include "powerpath/formula.hpp"
#include "powerpath/graph6.hpp"
#include "powerpath/oracle.hpp"
#include "powerpath/report.hpp"

using namespace powerpath;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

using Clock = std::chrono::steady_clock;

bool criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.ok && elapsed > budget_s) out.fail("took longer than the " + std::to_string(budget_s) + " s budget");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", elapsed, budget_s);
    std::cout << (out.ok ? "PASS" : "FAIL") << "  " << id << "  " << title << "  (" << timing << ")";
    if (!out.ok) std::cout << "  -- " << out.detail;
    std::cout << std::endl;
    return out.ok;
}

std::string np(std::int64_t n, std::int64_t k, std::int64_t p) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p);
}

std::set<CanonicalForm> as_set(const std::vector<CanonicalForm>& v) { return {v.begin(), v.end()}; }

}  // namespace

int main(int argc, char** argv) {
    const fs::path artifacts = argc > 1 ? fs::path(argv[1]) : fs::current_path();
    fs::create_directories(artifacts);
    bool all = true;

    all &= criterion(1, "exact P_k Turan numbers and extremal sets, 4<=n<=9, 3<=k<=6", 600, [] {
        Outcome o;
        for (std::int64_t k = 3; k <= 6; ++k) {
            for (std::int64_t n = 4; n <= 9; ++n) {
                const auto r = extremal_number(static_cast<std::size_t>(n), ForbiddenPattern::path_power(k, 1));
                std::set<CanonicalForm> expected;
                for (const auto& c : path_extremal_graphs(n, k)) expected.insert(canonical_form(c.graph));
                if (r.value != path_turan_value(n, k)) o.fail("value mismatch at " + np(n, k, 1));
                if (as_set(r.witnesses) != expected) o.fail("witness set mismatch at " + np(n, k, 1));
            }
        }
        return o;
    });

    all &= criterion(2, "decomposition family of P_k^p is {P_s} for six (k,p)", 300, [] {
        Outcome o;
        for (auto [k, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{{4, 2}, {5, 2}, {6, 2}, {7, 2}, {5, 3}, {6, 3}}) {
            const auto fam = decomposition_family(ForbiddenPattern::path_power(k, p));
            const auto s = s_parameter(k, p).s;
            if (fam.members.size() != 1 || !are_isomorphic(fam.members[0], Graph::path(static_cast<std::size_t>(s)))) {
                o.fail("k=" + std::to_string(k) + " p=" + std::to_string(p) + " gave " +
                       std::to_string(fam.members.size()) + " member(s)");
            }
        }
        return o;
    });

    all &= criterion(3, "extremal-family members are P_k^p-free with the formula's edge count, n<=40", 600, [] {
        Outcome o;
        for (std::int64_t p = 2; p <= 3; ++p) {
            for (std::int64_t k = 6; k <= 10; ++k) {
                for (std::int64_t n = 1; n <= 40; ++n) {
                    const auto value = power_path_turan_value(n, k, p).value;
                    for (const auto& c : power_extremal_family(n, k, p)) {
                        if (contains_path_power(c.graph, static_cast<std::size_t>(k), static_cast<std::size_t>(p))) {
                            o.fail("member contains the pattern at " + np(n, k, p));
                        }
                        if (static_cast<std::int64_t>(c.graph.edge_count()) != value) o.fail("edge count at " + np(n, k, p));
                    }
                }
            }
        }
        return o;
    });

    all &= criterion(4, "matching-pair and path-plus-edge witnesses contain P_k^p, k<=9, p<=3", 300, [] {
        Outcome o;
        for (std::int64_t p = 2; p <= 3; ++p) {
            for (std::int64_t k = 1; k <= 9; ++k) {
                if (!contains_path_power(lemma31_witness(k, p).graph, static_cast<std::size_t>(k), static_cast<std::size_t>(p))) {
                    o.fail("lemma31 witness misses the pattern at k=" + std::to_string(k) + " p=" + std::to_string(p));
                }
            }
            for (std::int64_t k = p + 1; k <= 9; ++k) {
                const auto s = s_parameter(k, p).s;
                for (auto which : {Lemma32Case::a, s % 2 == 0 ? Lemma32Case::b1 : Lemma32Case::b2}) {
                    const auto w = lemma32_witness(k, p, which);
                    if (!contains_path_power(w.graph, static_cast<std::size_t>(k), static_cast<std::size_t>(p))) {
                        o.fail(w.family + " witness misses the pattern at k=" + std::to_string(k) + " p=" + std::to_string(p));
                    }
                }
            }
        }
        return o;
    });

    all &= criterion(5, "K_12 plus a pendant vertex: 67 edges, P_13^2-free, above the formula's 63", 10, [] {
        Outcome o;
        const auto g = section4_graph(13, 2).graph;
        const auto formula = power_path_turan_value(13, 13, 2).value;
        if (g.edge_count() != 67) o.fail("edge count " + std::to_string(g.edge_count()));
        if (contains_path_power(g, 13, 2)) o.fail("contains P_13^2");
        if (formula != 63) o.fail("formula value " + std::to_string(formula));
        if (!(67 > formula)) o.fail("not above the formula");
        return o;
    });

    all &= criterion(6, "oracle >= formula for n<=10, p<=k<=8, p in {2,3}; gap table written", 1800, [&] {
        Outcome o;
        const auto jsonl = artifacts / "gap_table.jsonl";
        fs::remove(jsonl);
        std::vector<ReportRecord> rows;
        OracleOptions options;
        options.workers = 4;
        for (std::int64_t p = 2; p <= 3; ++p) {
            for (std::int64_t k = p; k <= 8; ++k) {
                for (std::int64_t n = 1; n <= 10; ++n) {
                    const auto r = extremal_number(static_cast<std::size_t>(n), ForbiddenPattern::path_power(k, p), options);
                    const auto formula = power_path_turan_value(n, k, p).value;
                    ReportRecord row{"oracle",
                                     {{"n", n}, {"k", k}, {"p", p}},
                                     {{"oracle_value", r.value},
                                      {"formula_value", formula},
                                      {"gap", r.value - formula},
                                      {"witness_count", r.witnesses.size()},
                                      {"evidence", "exhaustive at small n; the formula is claimed only for large n"}},
                                     {}};
                    for (const auto& w : r.witnesses) row.artifact_refs.push_back(w.encoding);
                    append_json_line(jsonl, row);
                    rows.push_back(std::move(row));
                    if (r.value < formula) o.fail("oracle below formula at " + np(n, k, p));
                }
            }
        }
        std::ofstream csv(artifacts / "gap_table.csv");
        write_csv(csv, rows);
        return o;
    });

    all &= criterion(7, "kernel properties: enumeration, canonical forms, graph6, identities, Erdos-Gallai", 300, [] {
        Outcome o;
        const std::vector<std::pair<std::size_t, std::size_t>> counts{{4, 11}, {5, 34}, {6, 156}};
        for (auto [n, expected] : counts) {
            if (enumerate_graphs(n).size() != expected) o.fail("enumeration count at n=" + std::to_string(n));
        }
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> density(0.05, 0.95);
        for (int i = 0; i < 50; ++i) {
            const auto g = oracle::random_graph(3 + static_cast<std::size_t>(i) % 18, density(rng), rng);
            const auto form = canonical_form(g);
            for (int r = 0; r < 100; ++r) {
                if (canonical_form(relabel(g, oracle::random_permutation(g.order(), rng))) != form) {
                    o.fail("canonical form changed under relabeling");
                }
            }
        }
        std::uniform_int_distribution<std::size_t> order(0, 30);
        for (int i = 0; i < 1000; ++i) {
            const auto g = oracle::random_graph(order(rng), density(rng), rng);
            if (graph6_decode(graph6_encode(g)) != g) o.fail("graph6 round trip");
            const auto h = oracle::random_graph(order(rng) % 12, density(rng), rng);
            if (join(g, h).edge_count() != g.edge_count() + h.edge_count() + g.order() * h.order()) o.fail("join identity");
            if (g.edge_count() + complement(g).edge_count() != g.order() * (g.order() - (g.order() > 0)) / 2) {
                o.fail("complement identity");
            }
        }
        for (std::int64_t n = 0; n <= 60; ++n) {
            for (std::int64_t k = 2; k <= 12; ++k) {
                if (Rational(path_turan_value(n, k)) > erdos_gallai_bound(n, k)) o.fail("Erdos-Gallai at n=" + std::to_string(n));
            }
        }
        return o;
    });

    all &= criterion(8, "band search agrees with generic subgraph search on 500 random instances", 300, [] {
        Outcome o;
        std::mt19937_64 rng(8);
        std::uniform_int_distribution<std::size_t> order(1, 12), kk(1, 8), pp(1, 3);
        std::uniform_real_distribution<double> density(0.3, 0.95);
        std::size_t present = 0;
        for (int i = 0; i < 500; ++i) {
            const auto host = oracle::random_graph(order(rng), density(rng), rng);
            const std::size_t k = kk(rng), p = pp(rng);
            const bool band = contains_path_power(host, k, p).has_value();
            const bool generic = contains_subgraph(host, path_power(k, p)).has_value();
            present += band;
            if (band != generic) o.fail("disagreement on " + graph6_encode(host) + " k=" + std::to_string(k) + " p=" + std::to_string(p));
        }
        if (present == 0 || present == 500) o.fail("degenerate instance mix");
        return o;
    });

    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
    return all ? 0 : 1;
}
