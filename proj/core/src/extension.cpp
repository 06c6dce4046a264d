#include "eck/extension.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>
#include <string>

namespace eck {

namespace {

std::string edge_str(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

ExtensionState::ExtensionState(PartialEdgeColouring& colouring, Vertex active,
                               std::span<const char> added, const ExtendOptions& opts,
                               ExtendStats* stats)
    : colouring_(colouring), graph_(colouring.graph()), active_(active), opts_(opts), stats_(stats) {
    if (!graph_.has_vertex(active))
        throw std::invalid_argument("active vertex " + std::to_string(active) + " not in graph");
    if (static_cast<int>(added.size()) != graph_.vertex_count())
        throw std::invalid_argument("added flags must cover every vertex");
    for (const IncidentEdge& ie : graph_.incident(active_))
        if (added[static_cast<std::size_t>(ie.to)] && !colouring_.is_coloured(ie.edge))
            working_.push_back(ie.to);
    // incident() is sorted by neighbour id, so working_ is ascending.
}

ExtensionState::ExtensionState(PartialEdgeColouring& colouring, Vertex active,
                               const ExtendOptions& opts, ExtendStats* stats)
    : ExtensionState(colouring, active,
                     std::vector<char>(static_cast<std::size_t>(colouring.graph().vertex_count()), 1),
                     opts, stats) {}

std::optional<Case1Choice> ExtensionState::try_case1() const {
    std::array<int, max_palette_size + 1> small_count{};
    ColourSet candidates;
    for (Vertex v : working_) {
        ColourSet s = common(v);
        if (s.empty())
            throw std::logic_error("extension stuck: no colour missing at both " +
                                   std::to_string(active_) + " and " + std::to_string(v));
        candidates = candidates | s;
        if (s.count() <= 2)
            for (ColourSet t = s; !t.empty(); t.remove(t.smallest()))
                ++small_count[static_cast<std::size_t>(t.smallest())];
    }

    for (ColourSet rest = candidates; !rest.empty();) {
        Colour colour = rest.smallest();
        rest.remove(colour);
        if (small_count[static_cast<std::size_t>(colour)] > 1) continue;
        Vertex best = -1;
        int best_size = max_palette_size + 1;
        for (Vertex v : working_) {
            ColourSet s = common(v);
            if (!s.contains(colour)) continue;
            if (s.count() < best_size) {
                best = v;
                best_size = s.count();
            }
        }
        return Case1Choice{colour, best};
    }
    return std::nullopt;
}

void ExtensionState::apply_case1(const Case1Choice& choice) {
    if (std::find(working_.begin(), working_.end(), choice.vertex) == working_.end())
        throw std::invalid_argument("case 1 vertex " + std::to_string(choice.vertex) +
                                    " is not in the working set");
    if (!common(choice.vertex).contains(choice.colour))
        throw std::invalid_argument("case 1 colour " + std::to_string(choice.colour) +
                                    " not missing at both ends");
    if (opts_.trace)
        *opts_.trace << "u=" << active_ << " case1 edge=" << edge_str(active_, choice.vertex)
                     << " colour=" << choice.colour << '\n';
    assign_working_edge(choice.vertex, choice.colour);
    if (stats_) ++stats_->case1_assignments;
    after_step();
}

void ExtensionState::do_case2() {
    if (working_.empty())
        throw std::logic_error("case 2 invoked with an empty working set");

    ColourSet in_some_set;
    Vertex w = -1;
    int w_size = max_palette_size + 1;
    for (Vertex v : working_) {
        ColourSet s = common(v);
        in_some_set = in_some_set | s;
        if (s.count() < w_size) {
            w = v;
            w_size = s.count();
        }
    }
    const ColourSet f_active = colouring_.missing(active_);
    const int working_size = static_cast<int>(working_.size());

    // The counting facts behind Case 2; a failure here is an implementation
    // bug, not an input problem.
    if (in_some_set.count() > working_size)
        throw std::logic_error("case 2 counting failed: union of working sets larger than |W|");
    if (f_active.count() < working_size + 1)
        throw std::logic_error("case 2 counting failed: active vertex misses too few colours");
    const ColourSet b_candidates = f_active - in_some_set;
    if (b_candidates.empty())
        throw std::logic_error("case 2: no colour missing at the active vertex lies outside "
                               "every working set");

    const Colour b = b_candidates.smallest();
    const Colour a = common(w).smallest();

    std::vector<ColourSet> before;
    if (opts_.check_invariants) {
        before.reserve(working_.size());
        for (Vertex v : working_) before.push_back(common(v));
    }

    const auto swap = colouring_.kempe_swap(w, a, b);
    if (swap.path_end == active_)
        throw std::logic_error("case 2: alternating path reached the active vertex");
    ++swaps_;
    if (swaps_ > std::max(colouring_.palette_size() - 1, 0))
        throw std::logic_error("case 2: more swaps than edges at one vertex");

    if (opts_.check_invariants) {
        // The swap may touch the working sets only at w (freed below) and at
        // the far end of the path, whose set loses at most {a} (it can gain
        // b, which the assignment below takes away again).
        for (std::size_t i = 0; i < working_.size(); ++i) {
            Vertex v = working_[i];
            if (v == w) continue;
            ColourSet now = common(v);
            ColourSet then = before[i];
            if (v != swap.path_end) {
                if (!(now == then))
                    throw std::logic_error("case 2: working set changed away from the path ends");
            } else if (!((then - now) - ColourSet::single(a)).empty() || now.empty()) {
                throw std::logic_error("case 2: path end lost more than the swapped colour");
            }
        }
        if (stats_) ++stats_->invariant_checkpoints;
    }

    if (opts_.trace)
        *opts_.trace << "u=" << active_ << " case2 w=" << w << " a=" << a << " b=" << b
                     << " path_end=" << swap.path_end << " path_len=" << swap.path_length
                     << " edge=" << edge_str(active_, w) << " colour=" << b << '\n';
    assign_working_edge(w, b);
    if (stats_) ++stats_->case2_swaps;
    after_step();
}

void ExtensionState::colour_one_vertex() {
    // At a genuine vertex start (no edge at the active vertex coloured yet)
    // every working vertex still has an uncoloured incident edge and degree
    // at most k-1, hence at least two missing colours.
    if (colouring_.missing(active_).count() == colouring_.palette_size())
        for (Vertex v : working_)
            if (colouring_.missing(v).count() < 2)
                throw std::logic_error("working vertex " + std::to_string(v) +
                                       " misses fewer than two colours at vertex start");

    while (!working_.empty()) {
        if (auto choice = try_case1())
            apply_case1(*choice);
        else
            do_case2();
    }
}

void ExtensionState::assign_working_edge(Vertex v, Colour c) {
    EdgeId e = graph_.find_edge(active_, v);
    if (e < 0)
        throw std::logic_error("no edge between " + std::to_string(active_) + " and " +
                               std::to_string(v));
    colouring_.assign(e, c);
    working_.erase(std::find(working_.begin(), working_.end(), v));
}

void ExtensionState::after_step() {
    check_properties();
    if (opts_.check_invariants) {
        if (auto violation = find_violation(graph_, colouring_.colours(),
                                            colouring_.palette_size(), false))
            throw std::logic_error("properness lost: " + violation->describe(graph_));
        if (!(colouring_.missing(active_) == colouring_.missing_recomputed(active_)))
            throw std::logic_error("cached missing set stale at the active vertex");
        for (Vertex v : working_)
            if (!(colouring_.missing(v) == colouring_.missing_recomputed(v)))
                throw std::logic_error("cached missing set stale at working vertex " +
                                       std::to_string(v));
        if (stats_) ++stats_->invariant_checkpoints;
    }
}

void ExtensionState::check_properties() const {
    int singletons = 0;
    for (Vertex v : working_) {
        ColourSet s = common(v);
        if (s.empty())
            throw std::logic_error("property (1) broken: no common missing colour for edge " +
                                   edge_str(active_, v));
        if (s.count() == 1) ++singletons;
    }
    if (singletons > 1)
        throw std::logic_error("property (2) broken: " + std::to_string(singletons) +
                               " working edges down to one candidate colour");
    if (stats_) ++stats_->invariant_checkpoints;
}

PartialEdgeColouring extend(const Graph& g, const SemiCoreDecomposition& dec,
                            const PartialEdgeColouring& semi_core_colouring, int palette_size,
                            const ExtendOptions& opts, ExtendStats* stats) {
    const Graph& h = dec.semi_core.graph;
    if (&semi_core_colouring.graph() != &h)
        throw std::invalid_argument("semi-core colouring is not bound to the decomposition's "
                                    "semi-core graph");
    if (semi_core_colouring.palette_size() != palette_size)
        throw std::invalid_argument("palette size mismatch between colouring and extension");
    if (auto violation = find_violation(h, semi_core_colouring.colours(), palette_size, true))
        throw std::invalid_argument("semi-core colouring invalid: " + violation->describe(h));

    // The semi-core vertices and the excluded order must partition V(G).
    std::vector<char> added(static_cast<std::size_t>(g.vertex_count()), 0);
    int covered = 0;
    for (Vertex v : dec.semi_core.to_parent) {
        if (!g.has_vertex(v) || added[static_cast<std::size_t>(v)])
            throw std::invalid_argument("decomposition does not partition the vertex set");
        added[static_cast<std::size_t>(v)] = 1;
        ++covered;
    }
    for (Vertex v : dec.excluded_order) {
        if (!g.has_vertex(v) || added[static_cast<std::size_t>(v)])
            throw std::invalid_argument("decomposition does not partition the vertex set");
        ++covered;
    }
    if (covered != g.vertex_count())
        throw std::invalid_argument("decomposition does not cover the vertex set");

    for (Vertex v : dec.excluded_order)
        if (g.degree(v) > palette_size - 1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)) +
                                        " but extension needs degree at most k-1 = " +
                                        std::to_string(palette_size - 1));

    PartialEdgeColouring colouring(g, palette_size);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        Vertex u = dec.semi_core.to_parent[static_cast<std::size_t>(h.edge(e).u)];
        Vertex v = dec.semi_core.to_parent[static_cast<std::size_t>(h.edge(e).v)];
        EdgeId ge = g.find_edge(u, v);
        if (ge < 0)
            throw std::invalid_argument("semi-core edge " + edge_str(u, v) +
                                        " does not exist in the host graph");
        colouring.assign(ge, semi_core_colouring.colour(e));
    }

    for (Vertex u : dec.excluded_order) {
        ExtensionState state(colouring, u, added, opts, stats);
        state.colour_one_vertex();
        added[static_cast<std::size_t>(u)] = 1;
        if (stats) ++stats->vertices_extended;
    }

    if (auto violation = find_violation(g, colouring.colours(), palette_size, true))
        throw std::logic_error("extension produced an invalid colouring: " +
                               violation->describe(g));
    return colouring;
}

}  // namespace eck
