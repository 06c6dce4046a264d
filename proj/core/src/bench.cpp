#include "eck/bench.hpp"

#include "eck/exact.hpp"
#include "eck/extension.hpp"
#include "eck/generators.hpp"
#include "eck/solver.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

namespace eck {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return (values[mid - 1] + values[mid]) / 2.0;
}

template <typename Fn>
double timed_median(int repeats, Fn&& fn) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repeats));
    for (int r = 0; r < repeats; ++r) {
        const auto start = Clock::now();
        fn();
        samples.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    }
    return median(std::move(samples));
}

}  // namespace

std::vector<BenchRow> run_bench(int k, int p, std::span<const int> n_values, std::uint64_t seed,
                                int repeats) {
    if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
    if (n_values.empty()) throw std::invalid_argument("need at least one n value");

    std::vector<BenchRow> rows;
    rows.reserve(n_values.size());
    for (int n : n_values) {
        const Graph g = gen_few_max_degree(p, k, n, seed);
        BenchRow row;
        row.n = n;
        row.m = g.edge_count();

        // Each phase is repeated on its own so a sub-microsecond phase is not
        // measured through the cache wreckage of the previous one.
        SemiCoreDecomposition dec;
        row.t_decompose = timed_median(repeats, [&] { dec = decompose(g); });
        row.q = dec.semi_core_size();

        std::optional<PartialEdgeColouring> kernel;
        row.t_semicore = timed_median(repeats, [&] { kernel = solve_exact(dec.semi_core.graph, k); });
        if (!kernel) throw std::logic_error("bench instance unexpectedly not colourable");

        row.t_extend = timed_median(repeats, [&] {
            PartialEdgeColouring extended = extend(g, dec, *kernel, k);
            if (!extended.complete()) throw std::logic_error("extension left edges uncoloured");
        });

        row.t_total = timed_median(repeats, [&] {
            SolveReport report = solve(g, k);
            if (!report.colourable) throw std::logic_error("bench instance unexpectedly not colourable");
        });
        rows.push_back(row);
    }
    return rows;
}

}  // namespace eck
