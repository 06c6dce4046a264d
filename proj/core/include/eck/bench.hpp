#pragma once

#include "eck/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace eck {

// Phase timings for one generated instance; times are medians over the
// requested repeats, in seconds. Each phase is timed in its own repeat loop,
// so the columns do not sum to t_total (end-to-end solve time).
struct BenchRow {
    int n = 0;
    int m = 0;
    int q = 0;
    double t_decompose = 0.0;
    double t_semicore = 0.0;
    double t_extend = 0.0;
    double t_total = 0.0;
};

// For fixed (k, p) and each n, generates gen_few_max_degree(p, k, n, seed)
// and reports per-phase medians over `repeats` runs of each phase.
std::vector<BenchRow> run_bench(int k, int p, std::span<const int> n_values, std::uint64_t seed,
                                int repeats);

}  // namespace eck
