#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "powerpath/constructions.hpp"
#include "powerpath/errors.hpp"
#include "powerpath/graph6.hpp"

using namespace powerpath;

TEST_CASE("graph6 reference strings") {
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_encode(Graph::complete(2)) == "A_");
    CHECK(graph6_encode(Graph(2)) == "A?");
    // Examples from the format description.
    CHECK(graph6_encode(Graph::complete(4)) == "C~");
    Graph g(5);
    g.add_edge(0, 2);
    g.add_edge(0, 4);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    CHECK(graph6_encode(g) == "DQc");
}

TEST_CASE("graph6 round trip") {
    auto t73 = turan_graph(7, 3).graph;
    CHECK(graph6_decode(graph6_encode(t73)) == t73);

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> order(0, 30);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        auto g = oracle::random_graph(order(rng), density(rng), rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 long size forms") {
    std::mt19937_64 rng(5);
    for (std::size_t n : {62u, 63u, 64u, 200u, 511u}) {
        auto g = oracle::random_graph(n, 0.1, rng);
        const auto text = graph6_encode(g);
        if (n >= 63) CHECK(text[0] == '~');
        CHECK(graph6_decode(text) == g);
    }
    CHECK(graph6_decode(">>graph6<<A_") == Graph::complete(2));
}

TEST_CASE("graph6 parse errors carry offsets") {
    auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            graph6_decode(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return SIZE_MAX;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("C~x") == 2);
    CHECK(offset_of("C") == 1);
    CHECK(offset_of("A\x20") == 1);
    CHECK(offset_of("A`") == 1);  // padding bit set
    CHECK_THROWS_AS(graph6_decode("~?HW"), SizeError);
}

TEST_CASE("graph6 line files") {
    std::istringstream in("A_\n\nC~\r\nBw\n");
    auto graphs = read_graph6_lines(in);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[1] == Graph::complete(4));
    std::ostringstream out;
    write_graph6_lines(out, graphs);
    CHECK(out.str() == "A_\nC~\nBw\n");

    std::istringstream bad("A_\nC~~\n");
    try {
        read_graph6_lines(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}
