#include "eck/extension.hpp"

#include "eck/exact.hpp"
#include "eck/generators.hpp"
#include "eck/oracle.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

using namespace eck;

namespace {

// Decomposition with an empty semi-core and every vertex excluded, the way
// the solver exercises the extension when the maximum degree is below k.
SemiCoreDecomposition scratch_decomposition(const Graph& g) {
    SemiCoreDecomposition dec;
    dec.semi_core.graph = Graph(0, {});
    dec.excluded_order.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(dec.excluded_order.begin(), dec.excluded_order.end(), 0);
    return dec;
}

std::vector<Colour> colour_vector(const PartialEdgeColouring& c) {
    return {c.colours().begin(), c.colours().end()};
}

}  // namespace

TEST_CASE("extension with nothing excluded returns the input colouring") {
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto dec = decompose(p4);
    REQUIRE(dec.excluded_order.empty());
    auto base = solve_exact(dec.semi_core.graph, 2);
    REQUIRE(base);
    auto extended = extend(p4, dec, *base, 2);
    CHECK(colour_vector(extended) == colour_vector(*base));
}

TEST_CASE("extension over the star with a tail") {
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    auto dec = decompose(g);
    REQUIRE(dec.excluded_order == std::vector<Vertex>{4, 5});

    PartialEdgeColouring base(dec.semi_core.graph, 3);
    base.assign(dec.semi_core.graph.find_edge(0, 1), 1);
    base.assign(dec.semi_core.graph.find_edge(0, 2), 2);
    base.assign(dec.semi_core.graph.find_edge(0, 3), 3);

    ExtendStats stats;
    auto extended = extend(g, dec, base, 3, {.check_invariants = true}, &stats);
    CHECK(verify_proper(extended, true));
    CHECK(extended.colour(g.find_edge(3, 4)) != 3);
    CHECK(extended.colour(g.find_edge(4, 5)) != extended.colour(g.find_edge(3, 4)));
    CHECK(stats.vertices_extended == 2);
    // Regression fixture: deterministic tie-breaks give the smallest colours.
    CHECK(extended.colour(g.find_edge(3, 4)) == 1);
    CHECK(extended.colour(g.find_edge(4, 5)) == 2);
}

TEST_CASE("extension from scratch builds a colouring of the whole graph") {
    // Triangle with one colour to spare: forces one Case 2 swap.
    Graph k3 = gen_complete(3);
    auto dec = scratch_decomposition(k3);
    PartialEdgeColouring empty(dec.semi_core.graph, 3);
    ExtendStats stats;
    auto extended = extend(k3, dec, empty, 3, {.check_invariants = true}, &stats);
    CHECK(verify_proper(extended, true));
    CHECK(stats.case2_swaps == 1);
    // Regression fixture for the deterministic trace.
    CHECK(colour_vector(extended) == std::vector<Colour>{2, 1, 3});
}

TEST_CASE("degree-zero vertices are no-ops") {
    Graph g(3, {{0, 1}});
    auto dec = scratch_decomposition(g);
    PartialEdgeColouring empty(dec.semi_core.graph, 2);
    auto extended = extend(g, dec, empty, 2);
    CHECK(verify_proper(extended, true));
}

TEST_CASE("case 1 choices") {
    SUBCASE("single working vertex with one candidate colour") {
        // F(1) = {2} (edges coloured 1 and 3), active vertex 0 untouched.
        Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
        PartialEdgeColouring c(g, 3);
        c.assign(g.find_edge(1, 2), 1);
        c.assign(g.find_edge(1, 3), 3);
        ExtensionState state(c, 0);
        REQUIRE(state.working_set() == std::vector<Vertex>{1});
        auto choice = state.try_case1();
        REQUIRE(choice);
        CHECK(choice->colour == 2);
        CHECK(choice->vertex == 1);
        state.apply_case1(*choice);
        CHECK(state.working_set().empty());
        CHECK(c.colour(g.find_edge(0, 1)) == 2);
    }
    SUBCASE("a colour in no small set qualifies") {
        // F(0,1) = {1,2,3}, F(0,2) = {2,3,4}: colour 1 sits in zero sets of
        // size <= 2, so case 1 picks it with the only set containing it.
        Graph g(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
        PartialEdgeColouring c(g, 4);
        c.assign(g.find_edge(1, 3), 4);
        c.assign(g.find_edge(2, 4), 1);
        ExtensionState state(c, 0);
        REQUIRE(state.working_set() == std::vector<Vertex>{1, 2});
        auto choice = state.try_case1();
        REQUIRE(choice);
        CHECK(choice->colour == 1);
        CHECK(choice->vertex == 1);
    }
    SUBCASE("every candidate colour in two small sets: case 1 fails") {
        // F(0,1) = F(0,2) = {1,2}: the exact trigger for case 2.
        Graph g(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
        PartialEdgeColouring c(g, 3);
        c.assign(g.find_edge(1, 3), 3);
        c.assign(g.find_edge(2, 4), 3);
        ExtensionState state(c, 0);
        REQUIRE(state.working_set() == std::vector<Vertex>{1, 2});
        CHECK(!state.try_case1());
    }
}

TEST_CASE("case 2 swaps a colour free and assigns it") {
    // Same trigger as above: W = {1,2}, F(0,1) = F(0,2) = {1,2}, F(0) full.
    // b = 3 (missing at 0, in no working set), w = 1, a = 1; the swap walks
    // the path 1-3 recolouring 3 -> 1, then edge (0,1) takes colour 3.
    Graph g(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
    PartialEdgeColouring c(g, 3);
    c.assign(g.find_edge(1, 3), 3);
    c.assign(g.find_edge(2, 4), 3);
    ExtensionState state(c, 0, {.check_invariants = true});
    REQUIRE(!state.try_case1());

    state.do_case2();
    CHECK(c.colour(g.find_edge(0, 1)) == 3);
    CHECK(c.colour(g.find_edge(1, 3)) == 1);
    CHECK(c.colour(g.find_edge(2, 4)) == 3);
    CHECK(state.working_set() == std::vector<Vertex>{2});
    CHECK(!find_violation(g, c.colours(), 3, false));

    state.colour_one_vertex();
    CHECK(state.working_set().empty());
    CHECK(c.colour(g.find_edge(0, 2)) == 1);
}

TEST_CASE("case 2 states found by sweeping small graphs keep the invariants") {
    // Extending every small graph from scratch with one spare colour drives
    // plenty of Case 2 swaps; the checked mode throws on any breach of the
    // step invariants.
    int case2_total = 0;
    for (int n = 2; n <= 5; ++n) {
        test::for_each_graph(n, [&](const Graph& g) {
            auto dec = scratch_decomposition(g);
            PartialEdgeColouring empty(dec.semi_core.graph, g.max_degree() + 1);
            ExtendStats stats;
            auto extended =
                extend(g, dec, empty, g.max_degree() + 1, {.check_invariants = true}, &stats);
            CHECK(verify_proper(extended, true));
            case2_total += stats.case2_swaps;
        });
    }
    CHECK(case2_total > 0);
}

TEST_CASE("scratch extension matches the oracle's yes on small graphs") {
    for (int n = 2; n <= 5; ++n) {
        test::for_each_graph(n, [&](const Graph& g) {
            int k = g.max_degree() + 1;
            auto dec = scratch_decomposition(g);
            PartialEdgeColouring empty(dec.semi_core.graph, k);
            auto extended = extend(g, dec, empty, k);
            CHECK(verify_proper(extended, true));
            CHECK(oracle_solve(g, k).has_value());
        });
    }
}

TEST_CASE("extension traces are emitted on request") {
    Graph k3 = gen_complete(3);
    auto dec = scratch_decomposition(k3);
    PartialEdgeColouring empty(dec.semi_core.graph, 3);
    std::ostringstream trace;
    extend(k3, dec, empty, 3, {.check_invariants = false, .trace = &trace});
    CHECK(trace.str().find("case1") != std::string::npos);
    CHECK(trace.str().find("case2") != std::string::npos);
}

TEST_CASE("extension rejects bad inputs") {
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    auto dec = decompose(g);

    SUBCASE("incomplete semi-core colouring") {
        PartialEdgeColouring base(dec.semi_core.graph, 3);
        CHECK_THROWS_AS(extend(g, dec, base, 3), std::invalid_argument);
    }
    SUBCASE("palette mismatch") {
        auto base = solve_exact(dec.semi_core.graph, 3);
        REQUIRE(base);
        CHECK_THROWS_AS(extend(g, dec, *base, 4), std::invalid_argument);
    }
    SUBCASE("colouring bound to a different graph") {
        auto other = decompose(g);
        auto base = solve_exact(other.semi_core.graph, 3);
        REQUIRE(base);
        CHECK_THROWS_AS(extend(g, dec, *base, 3), std::invalid_argument);
    }
    SUBCASE("excluded vertex with too high a degree") {
        // k = 3 but vertex 0 (degree 3) is excluded by a hand-made split.
        SemiCoreDecomposition fake;
        fake.semi_core = induced_subgraph(g, std::vector<Vertex>{4, 5});
        fake.excluded_order = {0, 1, 2, 3};
        PartialEdgeColouring base(fake.semi_core.graph, 3);
        base.assign(0, 1);
        CHECK_THROWS_WITH(extend(g, fake, base, 3), doctest::Contains("degree"));
    }
}
