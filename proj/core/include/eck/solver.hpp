#pragma once

#include "eck/colouring.hpp"
#include "eck/extension.hpp"
#include "eck/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace eck {

enum class Shortcut {
    none,                 // max degree equals k; the full pipeline ran
    delta_le_k_minus_1,   // always colourable; witness built from scratch
    delta_ge_k_plus_1,    // never colourable
};

std::string to_string(Shortcut s);

struct PhaseTimings {
    double decompose_seconds = 0.0;
    double semi_core_seconds = 0.0;
    double extend_seconds = 0.0;
    double total_seconds = 0.0;
};

struct SolveOptions {
    bool check_invariants = false;
    std::ostream* trace = nullptr;
};

// Outcome of one solve run. delta and core_size always describe the input
// graph; semi_core_size and semi_core_edges describe the semi-core the
// pipeline actually used and stay 0 when a shortcut skipped decomposition.
// The witness, when present, is complete, proper and bound to the input
// graph (it borrows the graph, which must outlive the report).
struct SolveReport {
    bool colourable = false;
    std::optional<PartialEdgeColouring> witness;
    int delta = 0;
    int core_size = 0;       // p: number of max-degree vertices
    int semi_core_size = 0;  // q
    int semi_core_edges = 0;
    Shortcut shortcut = Shortcut::none;
    PhaseTimings timings;
    ExtendStats extend_stats;
};

// Decides whether g has a proper k-edge colouring and constructs one if so.
// Fast paths: delta <= k-1 is always a yes (the witness is built by running
// the extension over every vertex from an empty start), delta >= k+1 is a
// no. Otherwise the semi-core is solved exactly and the colouring extended.
// Never mutates g; concurrent solves on a shared graph are safe.
SolveReport solve(const Graph& g, int k, const SolveOptions& opts = {});

struct ChromaticIndexResult {
    int chromatic_index;  // delta or delta + 1
    int delta;
    bool class_one;       // chromatic_index == delta
    PartialEdgeColouring witness;
};

// Constructive chromatic index: solve with delta colours, fall back to
// delta + 1 (which always succeeds). Rejects edgeless graphs.
ChromaticIndexResult chromatic_index(const Graph& g, const SolveOptions& opts = {});

}  // namespace eck
