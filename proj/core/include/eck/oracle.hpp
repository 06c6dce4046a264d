#pragma once

#include "eck/colouring.hpp"
#include "eck/graph.hpp"

#include <optional>
#include <vector>

namespace eck {

// Ground-truth decision for tests: plain exhaustive backtracking directly
// over the edges of g, with none of the solver's reductions or bookkeeping.
// Intended for small graphs only (roughly <= 8 vertices / <= 15 edges).
std::optional<std::vector<Colour>> oracle_solve(const Graph& g, int k);

}  // namespace eck
