#include "eck/generators.hpp"
#include "eck/io.hpp"

#include "eck/graph.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using namespace eck;

TEST_CASE("standard families") {
    Graph k4 = gen_complete(4);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    for (Vertex u = 0; u < 4; ++u) CHECK(k4.degree(u) == 3);

    Graph c5 = gen_cycle(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.max_degree() == 2);

    Graph star = gen_star(4);
    CHECK(star.vertex_count() == 5);
    CHECK(star.degree(0) == 4);

    Graph petersen = gen_petersen();
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    for (Vertex u = 0; u < 10; ++u) CHECK(petersen.degree(u) == 3);
    CHECK(decompose(petersen).core_size() == 10);

    CHECK_THROWS_AS(gen_complete(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(gen_star(0), std::invalid_argument);
}

TEST_CASE("few-max-degree generator") {
    SUBCASE("exactly one vertex of degree three") {
        Graph g = gen_few_max_degree(1, 3, 6, 1);
        CHECK(g.vertex_count() == 6);
        CHECK(g.max_degree() == 3);
        int maxed = 0;
        for (Vertex u = 0; u < 6; ++u) maxed += g.degree(u) == 3;
        CHECK(maxed == 1);
    }
    SUBCASE("degree profile and semi-core size bound") {
        for (std::uint64_t seed : {2ULL, 3ULL, 4ULL}) {
            const int p = 2, k = 3, n = 20;
            Graph g = gen_few_max_degree(p, k, n, seed);
            CHECK(g.max_degree() == k);
            int maxed = 0;
            for (Vertex u = 0; u < n; ++u) maxed += g.degree(u) == k;
            CHECK(maxed == p);
            auto dec = decompose(g);
            CHECK(dec.core_size() == p);
            CHECK(dec.semi_core_size() <= p + k * p);
            CHECK(2 * dec.semi_core.graph.edge_count() <= k * k * p);
        }
    }
    SUBCASE("deterministic for a fixed seed") {
        Graph a = gen_few_max_degree(3, 4, 40, 12345);
        Graph b = gen_few_max_degree(3, 4, 40, 12345);
        CHECK(a.edges() == b.edges());
    }
    SUBCASE("matched pairs when the maximum degree is one") {
        Graph g = gen_few_max_degree(4, 1, 7, 0);
        CHECK(g.edge_count() == 2);
        CHECK(g.max_degree() == 1);
        CHECK_THROWS_AS(gen_few_max_degree(3, 1, 7, 0), std::invalid_argument);
    }
    SUBCASE("infeasible parameters are rejected with an explanation") {
        CHECK_THROWS_AS(gen_few_max_degree(0, 3, 6, 0), std::invalid_argument);
        CHECK_THROWS_AS(gen_few_max_degree(1, 0, 6, 0), std::invalid_argument);
        CHECK_THROWS_WITH(gen_few_max_degree(4, 3, 5, 0), doctest::Contains("at least"));
    }
}

TEST_CASE("graph text round trips") {
    SUBCASE("single edge") {
        Graph g = read_graph("p 2 1\ne 0 1\n");
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("canonical output") {
        CHECK(write_graph(gen_cycle(3)) == "p 3 3\ne 0 1\ne 0 2\ne 1 2\n");
    }
    SUBCASE("comments, blank lines, missing trailing newline") {
        Graph g = read_graph("c a triangle\np 3 3\n\ne 0 1\ne 1 2\nc mid comment\ne 0 2");
        CHECK(g.edge_count() == 3);
    }
    SUBCASE("write then read is the identity, rewriting is bit-exact") {
        std::vector<Graph> graphs{gen_complete(6), gen_cycle(9), gen_star(5), gen_petersen(),
                                  gen_few_max_degree(2, 4, 50, 11), Graph(4, {})};
        SplitMix64 rng(5);
        for (int round = 0; round < 25; ++round)
            graphs.push_back(test::random_graph(3 + static_cast<int>(rng.next_below(20)),
                                                static_cast<int>(rng.next_below(30)), rng));
        for (const Graph& g : graphs) {
            std::string text = write_graph(g);
            Graph back = read_graph(text);
            CHECK(back.vertex_count() == g.vertex_count());
            CHECK(back.edges() == g.edges());
            CHECK(write_graph(back) == text);
        }
    }
}

TEST_CASE("graph parse errors carry line numbers") {
    CHECK_THROWS_WITH(read_graph("p 3 2\ne 0 1\ne 1 2\ne 0 2\n"), doctest::Contains("line 4"));
    CHECK_THROWS_WITH(read_graph("p 3 2\nc x\ne 0 1\ne 1 2\ne 0 2\n"), doctest::Contains("line 5"));
    CHECK_THROWS_WITH(read_graph("p 2 2\ne 0 1\ne 1 0\n"), doctest::Contains("duplicate"));
    CHECK_THROWS_WITH(read_graph("p 2 5\ne 0 1\n"), doctest::Contains("declares"));
    CHECK_THROWS_WITH(read_graph("e 0 1\n"), doctest::Contains("line 1"));
    CHECK_THROWS_WITH(read_graph("p 2 1\ne 0 2\n"), doctest::Contains("line 2"));
    CHECK_THROWS_WITH(read_graph("p two 1\ne 0 1\n"), doctest::Contains("line 1"));
    CHECK_THROWS_WITH(read_graph("q 1 2\n"), doctest::Contains("unknown line type"));
    CHECK_THROWS_AS(read_graph(""), std::invalid_argument);
}

TEST_CASE("colouring text round trips") {
    Graph k3 = gen_complete(3);
    std::vector<Colour> colours{1, 2, 3};
    std::string text = write_colouring(k3, colours);
    CHECK(text == "0 1 1\n0 2 2\n1 2 3\n");
    CHECK(read_colouring(text, k3) == colours);

    // any line order is accepted
    CHECK(read_colouring("1 2 3\n0 1 1\n0 2 2\n", k3) == colours);

    CHECK_THROWS_WITH(read_colouring("0 1 1\n0 2 2\n", k3), doctest::Contains("covers 2 of 3"));
    CHECK_THROWS_WITH(read_colouring("0 1 1\n0 2 2\n1 2 3\n0 1 2\n", k3),
                      doctest::Contains("line 4"));
    CHECK_THROWS_WITH(read_colouring("0 1 1\n0 2 2\n2 1 0\n", k3),
                      doctest::Contains("positive"));
    CHECK_THROWS_WITH(read_colouring("0 1 1\n0 2 2\n1 1 3\n", k3),
                      doctest::Contains("not an edge"));
    std::vector<Colour> incomplete{1, uncoloured, 2};
    CHECK_THROWS_AS(write_colouring(k3, incomplete), std::invalid_argument);
}
