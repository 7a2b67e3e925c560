#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "powerpath/constructions.hpp"
#include "powerpath/graph6.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + POWERPATH_CLI + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json first_line(const std::string& text) { return json::parse(text.substr(0, text.find('\n'))); }

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("powerpath_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        std::ofstream(dir / name) << content;
        return (dir / name).string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("construct writes graph6 and a sidecar") {
    Scratch s;
    auto r = run("construct turan --n 7 --p 3 --sidecar " + s.path("t.json"));
    CHECK(r.code == 0);
    CHECK(powerpath::graph6_decode(r.out.substr(0, r.out.find('\n'))).edge_count() == 16);
    std::ifstream side(s.path("t.json"));
    const auto j = json::parse(side);
    CHECK(j["result"]["edges"] == 16);
    CHECK(j["result"]["graphs"][0]["roles"]["class-1"].size() == 3);

    r = run("construct section4 --k 13 --p 2 --sidecar " + s.path("s.json"));
    CHECK(r.code == 0);
    CHECK(json::parse(std::ifstream(s.path("s.json")))["result"]["edges"] == 67);

    r = run("construct h --n 10 --k 6 --a 2 --sidecar " + s.path("h.json"));
    CHECK(r.code == 0);
    CHECK(json::parse(std::ifstream(s.path("h.json")))["result"]["edges"] == 18);

    r = run("construct path-extremal --n 5 --k 4");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("construct errors") {
    CHECK(run("construct bogus --n 3").code == 2);
    CHECK(run("construct turan --n 7").code == 2);
    CHECK(run("construct h --n 10 --k 6 --a 0").code == 3);
    CHECK(run("construct lemma32 --k 8 --p 2 --case b1").code == 3);
    CHECK(run("construct turan --n 900 --p 2").code == 5);
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("check verdicts") {
    Scratch s;
    const auto lemma = s.file("l.g6", powerpath::graph6_encode(powerpath::lemma31_witness(6, 2).graph) + "\n");
    auto r = run("check --host " + lemma + " --path-power 6 2");
    CHECK(r.code == 0);
    auto j = first_line(r.out);
    CHECK(j["kind"] == "containment");
    CHECK(j["result"]["present"] == true);
    CHECK(j["result"]["embedding"].size() == 6);

    const auto s4 = s.file("s4.g6", powerpath::graph6_encode(powerpath::section4_graph(13, 2).graph) + "\n");
    r = run("check --host " + s4 + " --path-power 13 2");
    CHECK(r.code == 0);
    CHECK(first_line(r.out)["result"]["present"] == false);

    const auto k4 = s.file("k4.g6", "C~\n");
    const auto p42 = s.file("p42.g6", powerpath::graph6_encode(powerpath::path_power(4, 2)) + "\n");
    r = run("check --host " + k4 + " --pattern " + p42);
    CHECK(r.code == 0);
    CHECK(first_line(r.out)["result"]["present"] == true);

    const auto two = s.file("two.g6", "C~\nC?\n");
    r = run("check --host " + two + " --path-power 4 2");
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("check parse failures exit 4 with an offset") {
    Scratch s;
    const auto bad = s.file("bad.g6", "C~x\n");
    const std::string cmd = std::string(POWERPATH_CLI) + " check --host " + bad + " --path-power 4 2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string text;
    std::array<char, 512> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 4);
    CHECK(text.find("offset 2") != std::string::npos);
    CHECK(run("check --host " + s.path("missing.g6") + " --path-power 4 2").code == 2);
}

TEST_CASE("number") {
    auto r = run("number --n 13 --k 13 --p 2");
    CHECK(r.code == 0);
    auto j = first_line(r.out);
    CHECK(j["kind"] == "formula");
    CHECK(j["result"]["value"] == 63);
    CHECK(j["result"]["argmax_splits"] == json::array({7}));

    j = first_line(run("number --n 8 --k 4 --p 1").out);
    CHECK(j["result"]["value"] == 7);

    r = run("number --n 6 --k 4 --p 2 --oracle");
    CHECK(r.code == 0);
    j = first_line(r.out);
    CHECK(j["kind"] == "oracle");
    CHECK(j["result"]["gap"] == j["result"]["oracle_value"].get<int>() - j["result"]["value"].get<int>());
    CHECK(j["result"]["gap"].get<int>() >= 0);

    CHECK(run("number --n 11 --k 4 --p 2 --oracle").code == 5);
    CHECK(run("number --n 11 --k 4 --p 2").code == 0);
    CHECK(run("number --n 11 --k 4").code == 2);
}

TEST_CASE("verify suites") {
    for (const char* suite : {"section4", "prop25", "lemma31", "lemma32"}) {
        auto r = run(std::string("verify ") + suite);
        CHECK_MESSAGE(r.code == 0, suite);
        auto j = first_line(r.out);
        CHECK(j["kind"] == "verification");
        CHECK(j["result"]["passed"] == true);
    }
    auto r = run("verify theorem21 --n-max 7 --k-max 5");
    CHECK(r.code == 0);
    CHECK(first_line(r.out)["result"]["check_count"] == 12);
    CHECK(run("verify section4 --k 13 --p 2").code == 0);
    CHECK(run("verify gap-table --n-max 11").code == 5);
    CHECK(run("verify nonsense").code == 2);
}

TEST_CASE("verify exits 1 on a failed assertion") {
    // K_{k-1} plus a pendant vertex at k = 6, p = 2 has 11 edges, below the formula's 12.
    auto r = run("verify section4 --k 6 --p 2");
    CHECK(r.code == 1);
    auto j = first_line(r.out);
    CHECK(j["result"]["passed"] == false);
    CHECK(j["result"]["failing"].size() == 1);
    CHECK(j["artifact_refs"].size() == 1);
}

TEST_CASE("decomp") {
    auto j = first_line(run("decomp --path-power 5 2").out);
    CHECK(j["kind"] == "decomposition");
    CHECK(j["result"]["names"] == json::array({"P_3"}));
    CHECK(first_line(run("decomp --path-power 4 2").out)["result"]["names"] == json::array({"P_2"}));
    Scratch s;
    const auto k3 = s.file("k3.g6", "Bw\n");
    CHECK(first_line(run("decomp --target " + k3).out)["result"]["names"] == json::array({"P_2"}));
    CHECK(run("decomp --path-power 11 2").code == 5);
}

TEST_CASE("reports append and render as CSV") {
    Scratch s;
    const auto out = s.path("r.jsonl");
    CHECK(run("--out " + out + " number --n 6 --k 6 --p 2").code == 0);
    CHECK(run("number --n 7 --k 6 --p 2 --out " + out).code == 0);
    CHECK(run("number --n 8 --k 6 --p 2", "PPT_OUT=" + out).code == 0);
    auto r = run("report " + out);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("kind,k,n,p,", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
    CHECK(r.out.find("formula,6,6,2,") != std::string::npos);

    const auto broken = s.file("broken.jsonl", "{\"kind\":\"formula\"}\n");
    CHECK(run("report " + broken).code == 4);
}

TEST_CASE("budget flags and environment fallbacks") {
    CHECK(run("number --n 9 --k 6 --p 2 --oracle", "PPT_WORKERS=2").code == 0);
    CHECK(run("--workers 0 number --n 9 --k 6 --p 2").code == 2);
    CHECK(run("number --n 9 --k 6 --p 2", "PPT_WORKERS=zero").code == 2);
    // A flag overrides the environment.
    CHECK(run("--workers 1 number --n 9 --k 6 --p 2", "PPT_WORKERS=zero").code == 0);
}
