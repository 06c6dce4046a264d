#pragma once

#include "eck/colouring.hpp"
#include "eck/graph.hpp"

#include <cstdint>
#include <optional>

namespace eck {

// Exhaustive decision/search for a complete proper k-edge colouring of a
// (small) graph. Backtracks over edges in canonical order, smallest feasible
// colour first, so the result is deterministic and absence is a proof of
// non-colourability.
std::optional<PartialEdgeColouring> solve_exact(const Graph& h, int k);

// Number of partial assignments the search visits before returning.
// Bounded by (k+1)^|E(H)|.
std::uint64_t count_search_nodes(const Graph& h, int k);

}  // namespace eck
