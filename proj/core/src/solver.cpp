#include "eck/solver.hpp"

#include "eck/exact.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

namespace eck {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::string to_string(Shortcut s) {
    switch (s) {
        case Shortcut::none: return "none";
        case Shortcut::delta_le_k_minus_1: return "delta<=k-1";
        case Shortcut::delta_ge_k_plus_1: return "delta>=k+1";
    }
    return "unknown";
}

SolveReport solve(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (k > max_palette_size)
        throw std::invalid_argument("k exceeds the supported maximum of " +
                                    std::to_string(max_palette_size));

    const auto t_total = Clock::now();
    SolveReport report;
    report.delta = g.max_degree();
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (g.degree(u) == report.delta) ++report.core_size;

    const ExtendOptions extend_opts{opts.check_invariants, opts.trace};

    if (report.delta <= k - 1) {
        report.shortcut = Shortcut::delta_le_k_minus_1;
        report.colourable = true;
        // Every vertex has spare room, so the extension can build the whole
        // colouring from an empty semi-core.
        SemiCoreDecomposition dec;
        dec.semi_core.graph = Graph(0, {});
        dec.excluded_order.resize(static_cast<std::size_t>(g.vertex_count()));
        std::iota(dec.excluded_order.begin(), dec.excluded_order.end(), 0);
        PartialEdgeColouring empty(dec.semi_core.graph, k);
        const auto t_extend = Clock::now();
        report.witness = extend(g, dec, empty, k, extend_opts, &report.extend_stats);
        report.timings.extend_seconds = seconds_since(t_extend);
    } else if (report.delta >= k + 1) {
        report.shortcut = Shortcut::delta_ge_k_plus_1;
        report.colourable = false;
    } else {
        const auto t_decompose = Clock::now();
        SemiCoreDecomposition dec = decompose(g);
        report.timings.decompose_seconds = seconds_since(t_decompose);
        report.semi_core_size = dec.semi_core_size();
        report.semi_core_edges = dec.semi_core.graph.edge_count();

        // Degree-sum bound on the kernel: 2|E(H)| <= kp + kp(k-1).
        const long long p = report.core_size;
        if (2LL * report.semi_core_edges > static_cast<long long>(k) * k * p)
            throw std::logic_error("semi-core edge bound violated: " +
                                   std::to_string(report.semi_core_edges) + " edges with k=" +
                                   std::to_string(k) + ", p=" + std::to_string(p));

        const auto t_semi_core = Clock::now();
        std::optional<PartialEdgeColouring> kernel_colouring = solve_exact(dec.semi_core.graph, k);
        report.timings.semi_core_seconds = seconds_since(t_semi_core);

        if (kernel_colouring) {
            report.colourable = true;
            const auto t_extend = Clock::now();
            report.witness = extend(g, dec, *kernel_colouring, k, extend_opts, &report.extend_stats);
            report.timings.extend_seconds = seconds_since(t_extend);
        }
    }

    report.timings.total_seconds = seconds_since(t_total);
    return report;
}

ChromaticIndexResult chromatic_index(const Graph& g, const SolveOptions& opts) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("chromatic index needs at least one edge");
    const int delta = g.max_degree();
    if (delta + 1 > max_palette_size)
        throw std::invalid_argument("maximum degree above " +
                                    std::to_string(max_palette_size - 1) + " is not supported");

    SolveReport with_delta = solve(g, delta, opts);
    if (with_delta.colourable)
        return {delta, delta, true, *std::move(with_delta.witness)};

    SolveReport with_extra = solve(g, delta + 1, opts);
    if (!with_extra.colourable || !with_extra.witness)
        throw std::logic_error("a colouring with delta+1 colours must exist");
    return {delta + 1, delta, false, *std::move(with_extra.witness)};
}

}  // namespace eck
