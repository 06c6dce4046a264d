#include "eck/exact.hpp"

#include <stdexcept>

namespace eck {

namespace {

struct ExactSearch {
    const Graph& h;
    PartialEdgeColouring colouring;
    std::uint64_t nodes = 0;

    ExactSearch(const Graph& h, int k) : h(h), colouring(h, k) {}

    bool run(EdgeId index) {
        ++nodes;
        if (index == h.edge_count()) return true;
        const Edge& e = h.edge(index);
        ColourSet feasible = colouring.common_missing(e.u, e.v);
        // In a fresh colouring the colour classes are interchangeable, so the
        // first edge only ever tries colour 1.
        if (index == 0) feasible = feasible & ColourSet::single(1);
        for (Colour c = feasible.smallest(); c != 0; feasible.remove(c), c = feasible.smallest()) {
            colouring.assign(index, c);
            if (run(index + 1)) return true;
            colouring.unassign(index);
        }
        return false;
    }
};

}  // namespace

std::optional<PartialEdgeColouring> solve_exact(const Graph& h, int k) {
    ExactSearch search(h, k);
    if (search.run(0)) return std::move(search.colouring);
    return std::nullopt;
}

std::uint64_t count_search_nodes(const Graph& h, int k) {
    ExactSearch search(h, k);
    search.run(0);
    return search.nodes;
}

}  // namespace eck
