#include "eck/colouring.hpp"

#include <stdexcept>

namespace eck {

std::vector<Colour> ColourSet::to_vector() const {
    std::vector<Colour> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

PartialEdgeColouring::PartialEdgeColouring(const Graph& g, int palette_size) : graph_(&g), k_(palette_size) {
    if (palette_size < 0)
        throw std::invalid_argument("palette size must be non-negative");
    if (palette_size > max_palette_size)
        throw std::invalid_argument("palette size " + std::to_string(palette_size) +
                                    " exceeds the supported maximum of " +
                                    std::to_string(max_palette_size));
    palette_ = ColourSet::full(k_);
    colour_.assign(static_cast<std::size_t>(g.edge_count()), uncoloured);
    used_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
}

void PartialEdgeColouring::require_edge(EdgeId e) const {
    if (e < 0 || e >= graph_->edge_count())
        throw std::invalid_argument("edge id " + std::to_string(e) + " out of range");
}

void PartialEdgeColouring::require_colour(Colour c) const {
    if (c < 1 || c > k_)
        throw std::invalid_argument("colour " + std::to_string(c) + " outside palette {1.." +
                                    std::to_string(k_) + "}");
}

ColourSet PartialEdgeColouring::missing(Vertex u) const {
    if (!graph_->has_vertex(u))
        throw std::invalid_argument("vertex " + std::to_string(u) + " not in graph");
    return palette_ - ColourSet::from_bits(used_[static_cast<std::size_t>(u)]);
}

ColourSet PartialEdgeColouring::common_missing(Vertex u, Vertex v) const {
    if (u == v)
        throw std::invalid_argument("common_missing requires two distinct vertices");
    return missing(u) & missing(v);
}

ColourSet PartialEdgeColouring::missing_recomputed(Vertex u) const {
    ColourSet result = palette_;
    for (const IncidentEdge& ie : graph_->incident(u)) {
        Colour c = colour_[static_cast<std::size_t>(ie.edge)];
        if (c != uncoloured) result.remove(c);
    }
    return result;
}

void PartialEdgeColouring::assign(EdgeId e, Colour c) {
    require_edge(e);
    require_colour(c);
    if (is_coloured(e))
        throw std::invalid_argument("edge id " + std::to_string(e) + " is already coloured");
    const Edge& edge = graph_->edge(e);
    if (!missing(edge.u).contains(c))
        throw std::invalid_argument("colour " + std::to_string(c) + " already present at vertex " +
                                    std::to_string(edge.u));
    if (!missing(edge.v).contains(c))
        throw std::invalid_argument("colour " + std::to_string(c) + " already present at vertex " +
                                    std::to_string(edge.v));
    colour_[static_cast<std::size_t>(e)] = c;
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    used_[static_cast<std::size_t>(edge.u)] |= bit;
    used_[static_cast<std::size_t>(edge.v)] |= bit;
    ++coloured_count_;
}

void PartialEdgeColouring::unassign(EdgeId e) {
    require_edge(e);
    Colour c = colour(e);
    if (c == uncoloured) return;
    const Edge& edge = graph_->edge(e);
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    used_[static_cast<std::size_t>(edge.u)] &= ~bit;
    used_[static_cast<std::size_t>(edge.v)] &= ~bit;
    colour_[static_cast<std::size_t>(e)] = uncoloured;
    --coloured_count_;
}

PartialEdgeColouring::SwapResult PartialEdgeColouring::kempe_swap(Vertex start, Colour a, Colour b) {
    if (!graph_->has_vertex(start))
        throw std::invalid_argument("vertex " + std::to_string(start) + " not in graph");
    require_colour(a);
    require_colour(b);
    if (a == b)
        throw std::invalid_argument("kempe_swap needs two distinct colours");
    if (!missing(start).contains(a))
        throw std::invalid_argument("kempe_swap: vertex " + std::to_string(start) +
                                    " does not miss colour " + std::to_string(a));

    // Walk first on the untouched colouring; properness guarantees at most
    // one edge of the wanted colour at each vertex, so the walk is a path.
    std::vector<EdgeId> path;
    Vertex cur = start;
    Colour want = b;
    while (true) {
        EdgeId next = -1;
        for (const IncidentEdge& ie : graph_->incident(cur)) {
            if (colour_[static_cast<std::size_t>(ie.edge)] == want) {
                next = ie.edge;
                cur = ie.to;
                break;
            }
        }
        if (next < 0) break;
        path.push_back(next);
        want = (want == a) ? b : a;
        if (path.size() > static_cast<std::size_t>(graph_->edge_count()))
            throw std::logic_error("kempe_swap: alternating walk revisited an edge");
    }

    // Exchange in one shot. XOR-ing both endpoint masks per edge cancels on
    // interior vertices (touched twice) and flips exactly the two ends.
    const std::uint64_t mask = (std::uint64_t{1} << (a - 1)) | (std::uint64_t{1} << (b - 1));
    for (EdgeId e : path) {
        colour_[static_cast<std::size_t>(e)] =
            (colour_[static_cast<std::size_t>(e)] == a) ? b : a;
        const Edge& edge = graph_->edge(e);
        used_[static_cast<std::size_t>(edge.u)] ^= mask;
        used_[static_cast<std::size_t>(edge.v)] ^= mask;
    }
    return {cur, static_cast<int>(path.size())};
}

std::string Violation::describe(const Graph& g) const {
    auto edge_str = [&](EdgeId e) {
        return "(" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + ")";
    };
    switch (kind) {
        case Kind::conflict:
            return "edges " + edge_str(edge_a) + " and " + edge_str(edge_b) +
                   " share vertex " + std::to_string(vertex) + " and a colour";
        case Kind::out_of_palette:
            return "edge " + edge_str(edge_a) + " has a colour outside the palette";
        case Kind::uncoloured_edge:
            return "edge " + edge_str(edge_a) + " is uncoloured";
    }
    return "unknown violation";
}

std::optional<Violation> find_violation(const Graph& g, std::span<const Colour> colours,
                                        int palette_size, bool require_complete) {
    if (static_cast<int>(colours.size()) != g.edge_count())
        throw std::invalid_argument("colour vector size does not match edge count");

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Colour c = colours[static_cast<std::size_t>(e)];
        if (c != uncoloured && (c < 1 || c > palette_size))
            return Violation{Violation::Kind::out_of_palette, -1, e, -1};
    }

    std::vector<EdgeId> seen(static_cast<std::size_t>(palette_size) + 1, -1);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const IncidentEdge& ie : g.incident(u)) {
            Colour c = colours[static_cast<std::size_t>(ie.edge)];
            if (c == uncoloured) continue;
            if (seen[static_cast<std::size_t>(c)] >= 0)
                return Violation{Violation::Kind::conflict, u, seen[static_cast<std::size_t>(c)],
                                 ie.edge};
            seen[static_cast<std::size_t>(c)] = ie.edge;
        }
        for (const IncidentEdge& ie : g.incident(u)) {
            Colour c = colours[static_cast<std::size_t>(ie.edge)];
            if (c != uncoloured) seen[static_cast<std::size_t>(c)] = -1;
        }
    }

    if (require_complete)
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (colours[static_cast<std::size_t>(e)] == uncoloured)
                return Violation{Violation::Kind::uncoloured_edge, -1, e, -1};

    return std::nullopt;
}

}  // namespace eck
