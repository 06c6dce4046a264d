#include "eck/exact.hpp"

#include "eck/generators.hpp"
#include "eck/oracle.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace eck;

TEST_CASE("exact search on small fixed instances") {
    SUBCASE("triangle needs three colours") {
        Graph k3 = gen_complete(3);
        auto with_three = solve_exact(k3, 3);
        REQUIRE(with_three);
        CHECK(verify_proper(*with_three, true));
        std::set<Colour> used(with_three->colours().begin(), with_three->colours().end());
        CHECK(used == std::set<Colour>{1, 2, 3});

        CHECK(!solve_exact(k3, 2));
    }
    SUBCASE("edgeless graphs are colourable with any palette") {
        Graph g(4, {});
        CHECK(solve_exact(g, 0));
        CHECK(solve_exact(g, 3));
    }
    SUBCASE("an edge cannot be coloured from an empty palette") {
        Graph g(2, {{0, 1}});
        CHECK(!solve_exact(g, 0));
    }
    SUBCASE("the Petersen graph has no 3-edge colouring") {
        Graph petersen = gen_petersen();
        CHECK(!oracle_solve(petersen, 3));  // independent route
        CHECK(!solve_exact(petersen, 3));
        auto with_four = solve_exact(petersen, 4);
        REQUIRE(with_four);
        CHECK(verify_proper(*with_four, true));
    }
}

TEST_CASE("search node counts") {
    CHECK(count_search_nodes(Graph(3, {}), 2) == 1);  // root only
    CHECK(count_search_nodes(Graph(2, {{0, 1}}), 2) <= 3);
    // Regression fixture: recorded from the deterministic search.
    CHECK(count_search_nodes(gen_complete(3), 2) == 3);
    CHECK(count_search_nodes(gen_complete(3), 3) == 4);
}

TEST_CASE("exact search is deterministic") {
    Graph g = gen_petersen();
    auto first = solve_exact(g, 4);
    auto second = solve_exact(g, 4);
    REQUIRE(first);
    REQUIRE(second);
    CHECK(std::vector<Colour>(first->colours().begin(), first->colours().end()) ==
          std::vector<Colour>(second->colours().begin(), second->colours().end()));
}

TEST_CASE("exact search agrees with the oracle on every graph up to 6 vertices") {
    for (int n = 0; n <= 6; ++n) {
        test::for_each_graph(n, [&](const Graph& g) {
            for (int k = 1; k <= 4; ++k) {
                auto fast = solve_exact(g, k);
                auto slow = oracle_solve(g, k);
                REQUIRE(fast.has_value() == slow.has_value());
                if (fast) CHECK(verify_proper(*fast, true));
            }
        });
    }
}
