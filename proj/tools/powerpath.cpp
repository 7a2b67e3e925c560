// powerpath: constructions, containment checks, Turan-number formulas and
// exhaustive oracles for powers of paths.
//
// Exit codes: 0 ok, 1 assertion failure (verify), 2 usage, 3 invalid
// parameters, 4 parse error, 5 size cap or time budget exceeded.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerpath/canonical.hpp"
#include "powerpath/constructions.hpp"
#include "powerpath/containment.hpp"
#include "powerpath/errors.hpp"
#include "powerpath/formula.hpp"
#include "powerpath/graph6.hpp"
#include "powerpath/oracle.hpp"
#include "powerpath/report.hpp"

namespace pp = powerpath;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kAssertion = 1, kUsage = 2, kParameter = 3, kParse = 4, kBudget = 5 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unset or empty gives nullopt; anything but a plain integer is a usage error.
std::optional<std::int64_t> env_integer(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    const std::string_view text(raw);
    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw UsageError(std::string(name) + " is not an integer: '" + raw + "'");
    }
    return value;
}

struct Settings {
    std::size_t workers = 1;
    std::int64_t timeout_ms = 0;  // 0 = unlimited
    std::string out;

    pp::SearchBudget budget() const {
        pp::SearchBudget b;
        if (timeout_ms > 0) b.timeout = std::chrono::milliseconds(timeout_ms);
        return b;
    }
    pp::OracleOptions oracle() const { return {workers, budget()}; }
};

struct Params {
    std::optional<std::int64_t> n, k, p, a, n0, variant, n_max, k_max, cap;
    std::vector<std::int64_t> path_power;
    std::string family, suite, host, pattern, target, sidecar, which = "a", cases = "default";
    std::vector<std::string> inputs;
    bool oracle = false;
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag, const std::string& context) {
    if (!v) throw UsageError(context + " needs " + flag);
    return *v;
}

std::size_t to_size(std::int64_t v, const char* what) {
    if (v < 0) throw pp::ParameterError(std::string(what) + " must be non-negative, got " + std::to_string(v));
    return static_cast<std::size_t>(v);
}

std::vector<pp::Graph> read_graphs(const std::string& path) {
    if (path == "-") return pp::read_graph6_lines(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return pp::read_graph6_lines(in);
}

void emit(const Settings& s, const pp::ReportRecord& r, bool print = true) {
    if (print) std::cout << pp::to_json_line(r) << '\n';
    if (!s.out.empty()) pp::append_json_line(s.out, r);
}

std::string describe(const pp::Graph& g) {
    if (g.order() >= 1 && pp::are_isomorphic(g, pp::Graph::path(g.order()))) return "P_" + std::to_string(g.order());
    return pp::graph6_encode(g);
}

json construction_json(const pp::LabeledConstruction& c) {
    return {{"family", c.family},
            {"graph6", pp::graph6_encode(c.graph)},
            {"order", c.graph.order()},
            {"edges", c.graph.edge_count()},
            {"roles", c.roles},
            {"parameters", c.parameters}};
}

pp::Lemma32Case lemma32_case(const std::string& s) {
    if (s == "a") return pp::Lemma32Case::a;
    if (s == "b1") return pp::Lemma32Case::b1;
    if (s == "b2") return pp::Lemma32Case::b2;
    throw UsageError("unknown lemma32 case '" + s + "' (a, b1, b2)");
}

// ---- construct ----

int cmd_construct(const Params& a, const Settings& s) {
    const std::string ctx = "construct " + a.family;
    std::vector<pp::LabeledConstruction> built;
    pp::ReportRecord r{"construction", {}, json::object(), {}};
    const auto param = [&](const char* key, const std::optional<std::int64_t>& v, const char* flag) {
        r.parameters[key] = need(v, flag, ctx);
        return *v;
    };
    if (a.family == "turan") {
        const auto n = param("n", a.n, "--n"), p = param("p", a.p, "--p");
        built.push_back(pp::turan_graph(to_size(n, "n"), to_size(p, "p")));
    } else if (a.family == "h") {
        const auto n = param("n", a.n, "--n"), k = param("k", a.k, "--k"), x = param("a", a.a, "--a");
        built.push_back(pp::h_graph(n, k, x));
    } else if (a.family == "path-power") {
        const auto k = param("k", a.k, "--k"), p = param("p", a.p, "--p");
        pp::LabeledConstruction c;
        c.family = "path-power";
        c.graph = pp::path_power(to_size(k, "k"), to_size(p, "p"));
        c.parameters = {{"k", k}, {"p", p}};
        built.push_back(std::move(c));
    } else if (a.family == "path-extremal") {
        const auto n = param("n", a.n, "--n"), k = param("k", a.k, "--k");
        built = pp::path_extremal_graphs(n, k);
    } else if (a.family == "power-extremal") {
        const auto n = param("n", a.n, "--n"), k = param("k", a.k, "--k"), p = param("p", a.p, "--p");
        if (a.n0) {
            r.parameters["n0"] = *a.n0;
            r.parameters["variant"] = a.variant.value_or(0);
            built.push_back(pp::power_extremal_candidate(n, k, p, *a.n0, to_size(a.variant.value_or(0), "variant")));
        } else {
            built = pp::power_extremal_family(n, k, p);
        }
    } else if (a.family == "lemma31") {
        const auto k = param("k", a.k, "--k"), p = param("p", a.p, "--p");
        built.push_back(pp::lemma31_witness(k, p));
    } else if (a.family == "lemma32") {
        const auto k = param("k", a.k, "--k"), p = param("p", a.p, "--p");
        built.push_back(pp::lemma32_witness(k, p, lemma32_case(a.which)));
    } else if (a.family == "section4") {
        const auto k = param("k", a.k, "--k"), p = param("p", a.p, "--p");
        built.push_back(pp::section4_graph(k, p));
    } else {
        throw UsageError("unknown family '" + a.family + "'");
    }

    json graphs = json::array();
    for (const auto& c : built) {
        std::cout << pp::graph6_encode(c.graph) << '\n';
        graphs.push_back(construction_json(c));
        r.artifact_refs.push_back(pp::graph6_encode(c.graph));
    }
    r.result = {{"family", a.family},
                {"count", built.size()},
                {"edges", built.empty() ? 0 : built.front().graph.edge_count()},
                {"order", built.empty() ? 0 : built.front().graph.order()},
                {"graphs", graphs}};
    if (!a.sidecar.empty()) {
        std::ofstream side(a.sidecar);
        if (!side) throw UsageError("cannot write " + a.sidecar);
        side << json(r).dump(2) << '\n';
    }
    emit(s, r, false);
    return kOk;
}

// ---- check ----

struct PatternChoice {
    pp::ForbiddenPattern pattern;
    std::map<std::string, std::int64_t> parameters;
};

PatternChoice choose_pattern(const Params& a, const std::string& file, const std::string& ctx) {
    if (!a.path_power.empty() && !file.empty()) throw UsageError(ctx + ": give either a pattern file or --path-power");
    if (!a.path_power.empty()) {
        const auto k = a.path_power[0], p = a.path_power[1];
        return {pp::ForbiddenPattern::path_power(to_size(k, "k"), to_size(p, "p")), {{"k", k}, {"p", p}}};
    }
    if (file.empty()) throw UsageError(ctx + " needs a pattern file or --path-power K P");
    auto graphs = read_graphs(file);
    if (graphs.empty()) throw UsageError(file + " holds no graph");
    return {pp::ForbiddenPattern::generic(std::move(graphs.front())), {}};
}

int cmd_check(const Params& a, const Settings& s) {
    if (a.host.empty()) throw UsageError("check needs --host FILE");
    auto choice = choose_pattern(a, a.pattern, "check");
    const auto hosts = read_graphs(a.host);
    const auto& h = choice.pattern.graph();
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        const auto& g = hosts[i];
        std::optional<pp::Embedding> e;
        if (!a.path_power.empty()) {
            e = pp::contains_path_power(g, h.order(), static_cast<std::size_t>(a.path_power[1]), s.budget());
        } else {
            e = pp::contains_subgraph(g, h, s.budget());
        }
        pp::ReportRecord r{"containment", choice.parameters, json::object(), {pp::graph6_encode(g), pp::graph6_encode(h)}};
        r.parameters["host_index"] = static_cast<std::int64_t>(i);
        r.result = {{"present", e.has_value()},
                    {"host_order", g.order()},
                    {"host_edges", g.edge_count()},
                    {"pattern_order", h.order()},
                    {"pattern_edges", h.edge_count()},
                    {"embedding", e ? json(e->mapping) : json(nullptr)}};
        emit(s, r);
    }
    return kOk;
}

// ---- number ----

json evaluation_json(const pp::TuranEvaluation& ev) {
    json rows = json::array();
    for (const auto& b : ev.breakdown) {
        rows.push_back({{"n0", b.n0},
                        {"n1", b.n1},
                        {"path_part", b.path_part},
                        {"cross", b.cross},
                        {"turan_part", b.turan_part},
                        {"total", b.total},
                        {"literal_total", b.literal_total}});
    }
    return {{"value", ev.value},
            {"argmax_splits", ev.argmax_splits},
            {"s", ev.s_used.s},
            {"j", ev.s_used.j},
            {"t", ev.s_used.t},
            {"literal_value", ev.literal_value},
            {"literal_argmax_splits", ev.literal_argmax_splits},
            {"breakdown", rows}};
}

int cmd_number(const Params& a, const Settings& s) {
    const auto n = need(a.n, "--n", "number"), k = need(a.k, "--k", "number"), p = need(a.p, "--p", "number");
    const auto ev = pp::power_path_turan_value(n, k, p);
    pp::ReportRecord r{"formula", {{"n", n}, {"k", k}, {"p", p}}, evaluation_json(ev), {}};
    if (a.oracle) {
        const auto res = pp::extremal_number(to_size(n, "n"),
                                             pp::ForbiddenPattern::path_power(to_size(k, "k"), to_size(p, "p")),
                                             s.oracle());
        r.kind = "oracle";
        r.result["oracle_value"] = res.value;
        r.result["gap"] = res.value - ev.value;
        r.result["witness_count"] = res.witnesses.size();
        for (const auto& w : res.witnesses) r.artifact_refs.push_back(w.encoding);
    }
    emit(s, r);
    return kOk;
}

// ---- verify ----

struct Suite {
    std::string name;
    json checks = json::array();
    json failing = json::array();
    std::vector<std::string> refs;
    const Settings* settings = nullptr;

    void record(const std::string& what, bool passed, json detail, const std::vector<std::string>& graphs = {}) {
        detail["check"] = what;
        detail["passed"] = passed;
        checks.push_back(detail);
        if (!passed) {
            failing.push_back(detail);
            refs.insert(refs.end(), graphs.begin(), graphs.end());
            std::cerr << "FAIL " << what << ": " << detail.dump() << '\n';
        }
    }
};

std::vector<std::string> encodings(const std::vector<pp::CanonicalForm>& forms) {
    std::vector<std::string> out;
    for (const auto& f : forms) out.push_back(f.encoding);
    return out;
}

void suite_theorem21(Suite& suite, const Params& a, const Settings& s) {
    const auto n_max = a.n_max.value_or(9), k_max = a.k_max.value_or(6);
    for (std::int64_t k = 3; k <= k_max; ++k) {
        for (std::int64_t n = 4; n <= n_max; ++n) {
            const auto res = pp::extremal_number(to_size(n, "n"), pp::path_power(to_size(k, "k"), 1), s.oracle());
            std::vector<pp::CanonicalForm> expected;
            for (const auto& c : pp::path_extremal_graphs(n, k)) expected.push_back(pp::canonical_form(c.graph));
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            const auto f = pp::path_turan_value(n, k);
            const bool ok = res.value == f && res.witnesses == expected;
            suite.record("theorem21 n=" + std::to_string(n) + " k=" + std::to_string(k), ok,
                         {{"n", n}, {"k", k}, {"oracle_value", res.value}, {"formula_value", f},
                          {"oracle_witnesses", encodings(res.witnesses)}, {"expected_witnesses", encodings(expected)}},
                         encodings(res.witnesses));
        }
    }
}

void suite_prop25(Suite& suite, const Params& a, const Settings& s) {
    std::vector<std::pair<std::int64_t, std::int64_t>> cases{{4, 2}, {5, 2}, {6, 2}, {7, 2}, {5, 3}, {6, 3}};
    if (a.k || a.p) {
        cases = {{need(a.k, "--k", "verify prop25"), need(a.p, "--p", "verify prop25")}};
    } else if (a.cases != "default") {
        throw UsageError("verify prop25: unknown --cases '" + a.cases + "' (default)");
    }
    for (auto [k, p] : cases) {
        const auto fam = pp::decomposition_family(pp::ForbiddenPattern::path_power(to_size(k, "k"), to_size(p, "p")),
                                                  std::nullopt, s.budget());
        const auto sp = pp::s_parameter(k, p);
        const bool ok = fam.members.size() == 1 && pp::are_isomorphic(fam.members[0], pp::Graph::path(to_size(sp.s, "s")));
        json names = json::array();
        std::vector<std::string> g6;
        for (const auto& m : fam.members) {
            names.push_back(describe(m));
            g6.push_back(pp::graph6_encode(m));
        }
        suite.record("prop25 k=" + std::to_string(k) + " p=" + std::to_string(p), ok,
                     {{"k", k}, {"p", p}, {"s", sp.s}, {"members", names}}, g6);
    }
}

void suite_lemma31(Suite& suite, const Params& a, const Settings& s) {
    const auto k_max = a.k_max.value_or(9), p_max = a.p.value_or(3);
    for (std::int64_t p = 2; p <= p_max; ++p) {
        for (std::int64_t k = 1; k <= k_max; ++k) {
            const auto w = pp::lemma31_witness(k, p);
            const bool ok = pp::contains_path_power(w.graph, to_size(k, "k"), to_size(p, "p"), s.budget()).has_value();
            suite.record("lemma31 k=" + std::to_string(k) + " p=" + std::to_string(p), ok,
                         {{"k", k}, {"p", p}, {"order", w.graph.order()}}, {pp::graph6_encode(w.graph)});
        }
    }
}

void suite_lemma32(Suite& suite, const Params& a, const Settings& s) {
    const auto k_max = a.k_max.value_or(9), p_max = a.p.value_or(3);
    for (std::int64_t p = 2; p <= p_max; ++p) {
        for (std::int64_t k = p + 1; k <= k_max; ++k) {
            const auto sp = pp::s_parameter(k, p);
            for (const char* label : {"a", sp.s % 2 == 0 ? "b1" : "b2"}) {
                const auto w = pp::lemma32_witness(k, p, lemma32_case(label));
                const bool ok = pp::contains_path_power(w.graph, to_size(k, "k"), to_size(p, "p"), s.budget()).has_value();
                suite.record("lemma32 k=" + std::to_string(k) + " p=" + std::to_string(p) + " case=" + label, ok,
                             {{"k", k}, {"p", p}, {"case", label}, {"order", w.graph.order()}},
                             {pp::graph6_encode(w.graph)});
            }
        }
    }
}

void suite_section4(Suite& suite, const Params& a, const Settings& s) {
    const auto k = a.k.value_or(13), p = a.p.value_or(2);
    const auto g = pp::section4_graph(k, p).graph;
    const auto expected_edges = (k - 1) * (k - 2) / 2 + p - 1;
    const auto formula = pp::power_path_turan_value(k, k, p).value;
    const bool free = !pp::contains_path_power(g, to_size(k, "k"), to_size(p, "p"), s.budget());
    const auto e = static_cast<std::int64_t>(g.edge_count());
    const std::vector<std::string> g6{pp::graph6_encode(g)};
    suite.record("section4 edge count", e == expected_edges, {{"edges", e}, {"expected", expected_edges}}, g6);
    suite.record("section4 pattern-free", free, {{"k", k}, {"p", p}}, g6);
    suite.record("section4 beats formula", e > formula, {{"edges", e}, {"formula_value", formula}}, g6);
}

void suite_gap_table(Suite& suite, const Params& a, const Settings& s) {
    const auto n_max = a.n_max.value_or(10), k_max = a.k_max.value_or(8);
    std::vector<std::int64_t> ps{2, 3};
    if (a.p) ps = {*a.p};
    for (auto p : ps) {
        for (std::int64_t k = p; k <= k_max; ++k) {
            for (std::int64_t n = 1; n <= n_max; ++n) {
                const auto res = pp::extremal_number(
                    to_size(n, "n"), pp::ForbiddenPattern::path_power(to_size(k, "k"), to_size(p, "p")), s.oracle());
                const auto ev = pp::power_path_turan_value(n, k, p);
                const bool ok = res.value >= ev.value;
                pp::ReportRecord row{"oracle",
                                     {{"n", n}, {"k", k}, {"p", p}},
                                     {{"oracle_value", res.value},
                                      {"formula_value", ev.value},
                                      {"gap", res.value - ev.value},
                                      {"witness_count", res.witnesses.size()}},
                                     encodings(res.witnesses)};
                emit(s, row, false);
                suite.record("gap n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p), ok,
                             row.result, row.artifact_refs);
            }
        }
    }
}

int cmd_verify(const Params& a, const Settings& s) {
    static const std::map<std::string, std::function<void(Suite&, const Params&, const Settings&)>> suites{
        {"theorem21", suite_theorem21}, {"prop25", suite_prop25},     {"lemma31", suite_lemma31},
        {"lemma32", suite_lemma32},     {"section4", suite_section4}, {"gap-table", suite_gap_table}};
    const auto it = suites.find(a.suite);
    if (it == suites.end()) throw UsageError("unknown suite '" + a.suite + "'");
    Suite suite;
    suite.name = a.suite;
    it->second(suite, a, s);
    const bool passed = suite.failing.empty();
    pp::ReportRecord r{"verification", {}, json::object(), suite.refs};
    for (const auto& [key, v] : {std::pair{"n_max", a.n_max}, {"k_max", a.k_max}, {"k", a.k}, {"p", a.p}}) {
        if (v) r.parameters[key] = *v;
    }
    r.result = {{"suite", suite.name},
                {"passed", passed},
                {"check_count", suite.checks.size()},
                {"failure_count", suite.failing.size()},
                {"checks", suite.checks},
                {"failing", suite.failing}};
    emit(s, r);
    return passed ? kOk : kAssertion;
}

// ---- decomp ----

int cmd_decomp(const Params& a, const Settings& s) {
    auto choice = choose_pattern(a, a.target, "decomp");
    std::optional<std::size_t> cap;
    if (a.cap) cap = to_size(*a.cap, "cap");
    const auto fam = pp::decomposition_family(choice.pattern, cap, s.budget());
    pp::ReportRecord r{"decomposition", choice.parameters, json::object(), {}};
    json names = json::array(), members = json::array();
    for (const auto& m : fam.members) {
        names.push_back(describe(m));
        members.push_back(pp::graph6_encode(m));
        r.artifact_refs.push_back(pp::graph6_encode(m));
    }
    r.result = {{"target", pp::graph6_encode(fam.target)},
                {"p", fam.p},
                {"host_width", fam.host_width},
                {"candidate_cap", fam.candidate_cap},
                {"member_count", fam.members.size()},
                {"members", members},
                {"names", names}};
    emit(s, r);
    return kOk;
}

// ---- report ----

int cmd_report(const Params& a, const Settings&) {
    std::vector<pp::ReportRecord> all;
    for (const auto& path : a.inputs) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        auto part = pp::read_json_lines(in);
        all.insert(all.end(), part.begin(), part.end());
    }
    pp::write_csv(std::cout, all);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructions, containment checks and exact oracles for powers of paths"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings settings;
    Params a;
    app.add_option("--workers", settings.workers, "Oracle worker threads [env PPT_WORKERS]")->check(CLI::PositiveNumber);
    app.add_option("--timeout-ms", settings.timeout_ms, "Per-query search budget in ms, 0 = none [env PPT_TIMEOUT_MS]")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--out", settings.out, "Append report records to this JSON-lines file")->envname("PPT_OUT");

    const auto ints = [&](CLI::App* sub, std::initializer_list<std::pair<const char*, std::optional<std::int64_t>*>> opts) {
        for (auto [flag, target] : opts) sub->add_option(flag, *target);
    };

    std::function<int(const Params&, const Settings&)> run;

    auto* construct = app.add_subcommand("construct", "Print graph6 line(s) for a named family");
    construct->add_option("family", a.family, "turan | h | path-power | path-extremal | power-extremal | lemma31 | lemma32 | section4")
        ->required()
        ->check(CLI::IsMember({"turan", "h", "path-power", "path-extremal", "power-extremal", "lemma31", "lemma32",
                               "section4"}));
    ints(construct, {{"--n", &a.n}, {"--k", &a.k}, {"--p", &a.p}, {"--a", &a.a}, {"--n0", &a.n0}, {"--variant", &a.variant}});
    construct->add_option("--case", a.which, "lemma32 case: a | b1 | b2");
    construct->add_option("--sidecar", a.sidecar, "Write the JSON sidecar (roles, parameters) to this file");
    construct->callback([&] { run = cmd_construct; });

    auto* check = app.add_subcommand("check", "Test graph6 hosts for a pattern");
    check->add_option("--host", a.host, "graph6 file, one graph per line ('-' = stdin)")->required();
    check->add_option("--pattern", a.pattern, "graph6 file; the first graph is the pattern");
    check->add_option("--path-power", a.path_power, "Pattern P_K^P")->expected(2);
    check->callback([&] { run = cmd_check; });

    auto* number = app.add_subcommand("number", "Evaluate the Turan-number formula for P_k^p");
    ints(number, {{"--n", &a.n}, {"--k", &a.k}, {"--p", &a.p}});
    number->add_flag("--oracle", a.oracle, "Also compute the exact value by exhaustive search (n <= 10)");
    number->callback([&] { run = cmd_number; });

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", a.suite, "theorem21 | prop25 | lemma31 | lemma32 | section4 | gap-table")
        ->required()
        ->check(CLI::IsMember({"theorem21", "prop25", "lemma31", "lemma32", "section4", "gap-table"}));
    ints(verify, {{"--n-max", &a.n_max}, {"--k-max", &a.k_max}, {"--k", &a.k}, {"--p", &a.p}});
    verify->add_option("--cases", a.cases, "prop25 case set");
    verify->callback([&] { run = cmd_verify; });

    auto* decomp = app.add_subcommand("decomp", "Compute the decomposition family of a target graph");
    decomp->add_option("--target", a.target, "graph6 file; the first graph is the target");
    decomp->add_option("--path-power", a.path_power, "Target P_K^P")->expected(2);
    ints(decomp, {{"--cap", &a.cap}});
    decomp->callback([&] { run = cmd_decomp; });

    auto* report = app.add_subcommand("report", "Render JSON-lines reports as CSV");
    report->add_option("inputs", a.inputs, "JSON-lines files")->required();
    report->callback([&] { run = cmd_report; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.count("--workers") == 0) {
            if (auto v = env_integer("PPT_WORKERS")) {
                if (*v < 1) throw UsageError("PPT_WORKERS must be a positive integer");
                settings.workers = static_cast<std::size_t>(*v);
            }
        }
        if (app.count("--timeout-ms") == 0) {
            if (auto v = env_integer("PPT_TIMEOUT_MS")) {
                if (*v < 0) throw UsageError("PPT_TIMEOUT_MS must be a non-negative integer");
                settings.timeout_ms = *v;
            }
        }
        return run(a, settings);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const pp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const pp::SizeError& e) {
        std::cerr << "size error: " << e.what() << '\n';
        return kBudget;
    } catch (const pp::ResourceError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const pp::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kParameter;
    } catch (const pp::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kParameter;
    } catch (const pp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParameter;
    }
}
