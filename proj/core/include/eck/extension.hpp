#pragma once

#include "eck/colouring.hpp"
#include "eck/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace eck {

struct ExtendOptions {
    // Re-verify properness and the missing-set caches after every single
    // step, on top of the always-on structural checks. Slow; for tests.
    bool check_invariants = false;
    // One line per assignment or swap.
    std::ostream* trace = nullptr;
};

struct ExtendStats {
    int vertices_extended = 0;
    int case1_assignments = 0;
    int case2_swaps = 0;
    std::uint64_t invariant_checkpoints = 0;
};

struct Case1Choice {
    Colour colour;
    Vertex vertex;
};

// One vertex's worth of the extension procedure: the active vertex u, the
// working set W of neighbours whose edge to u is still uncoloured, and the
// two colouring rules. The procedure keeps, after every step,
//   (1) every v in W has a colour missing at both u and v, and
//   (2) at most one v in W has exactly one such colour,
// which is what guarantees it never gets stuck. Both are checked after each
// step and a breach raises std::logic_error.
class ExtensionState {
public:
    // W = added neighbours of `active` whose edge to `active` is uncoloured.
    ExtensionState(PartialEdgeColouring& colouring, Vertex active, std::span<const char> added,
                   const ExtendOptions& opts = {}, ExtendStats* stats = nullptr);
    // Convenience: every vertex except `active` counts as added.
    ExtensionState(PartialEdgeColouring& colouring, Vertex active, const ExtendOptions& opts = {},
                   ExtendStats* stats = nullptr);

    Vertex active_vertex() const { return active_; }
    const std::vector<Vertex>& working_set() const { return working_; }

    // Case 1: a colour that appears in at most one working set of size <= 2.
    // Returns the smallest such colour and the working vertex whose set is
    // smallest among those containing it (ties: smallest id), or nullopt when
    // every candidate colour sits in two or more small sets.
    std::optional<Case1Choice> try_case1() const;
    void apply_case1(const Case1Choice& choice);

    // Case 2: pick a colour b missing at the active vertex but in no working
    // set, free it at the tightest working vertex w by swapping an
    // alternating path, then colour the edge (active, w) with b.
    void do_case2();

    // Runs Case 1 / Case 2 until the working set is empty.
    void colour_one_vertex();

private:
    ColourSet common(Vertex v) const { return colouring_.common_missing(active_, v); }
    void assign_working_edge(Vertex v, Colour c);
    void after_step();
    void check_properties() const;

    PartialEdgeColouring& colouring_;
    const Graph& graph_;
    Vertex active_;
    std::vector<Vertex> working_;  // ascending
    ExtendOptions opts_;
    ExtendStats* stats_;
    int swaps_ = 0;
};

// Extends a complete proper colouring of the decomposition's semi-core to
// the whole graph, colouring the excluded vertices' edges one vertex at a
// time. Every excluded vertex must have degree <= palette_size - 1. Edges
// inside the semi-core may be recoloured by swaps, so only properness of the
// result is promised, not agreement with the input colouring.
PartialEdgeColouring extend(const Graph& g, const SemiCoreDecomposition& dec,
                            const PartialEdgeColouring& semi_core_colouring, int palette_size,
                            const ExtendOptions& opts = {}, ExtendStats* stats = nullptr);

}  // namespace eck
