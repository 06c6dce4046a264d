#include "eck/oracle.hpp"

#include <stdexcept>

namespace eck {

namespace {

bool conflicts(const Graph& g, const std::vector<Colour>& col, EdgeId e, Colour c) {
    const Edge& edge = g.edge(e);
    for (const IncidentEdge& ie : g.incident(edge.u))
        if (ie.edge != e && col[static_cast<std::size_t>(ie.edge)] == c) return true;
    for (const IncidentEdge& ie : g.incident(edge.v))
        if (ie.edge != e && col[static_cast<std::size_t>(ie.edge)] == c) return true;
    return false;
}

bool search(const Graph& g, int k, std::vector<Colour>& col, EdgeId e) {
    if (e == g.edge_count()) return true;
    for (Colour c = 1; c <= k; ++c) {
        if (conflicts(g, col, e, c)) continue;
        col[static_cast<std::size_t>(e)] = c;
        if (search(g, k, col, e + 1)) return true;
        col[static_cast<std::size_t>(e)] = uncoloured;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Colour>> oracle_solve(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    std::vector<Colour> col(static_cast<std::size_t>(g.edge_count()), uncoloured);
    if (search(g, k, col, 0)) return col;
    return std::nullopt;
}

}  // namespace eck
