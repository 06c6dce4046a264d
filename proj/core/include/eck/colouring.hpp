#pragma once

#include "eck/graph.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eck {

// Valid colours are 1..palette_size; the sentinel marks an uncoloured edge
// and is never a member of any palette.
using Colour = int;
inline constexpr Colour uncoloured = 0;
inline constexpr int max_palette_size = 64;

// Subset of a palette {1..k}, k <= 64. Colour c maps to bit c-1.
class ColourSet {
public:
    constexpr ColourSet() = default;

    static constexpr ColourSet full(int palette_size) {
        return ColourSet(palette_size == 64 ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << palette_size) - 1);
    }
    static constexpr ColourSet single(Colour c) { return ColourSet(bit(c)); }
    static constexpr ColourSet from_bits(std::uint64_t bits) { return ColourSet(bits); }

    constexpr bool contains(Colour c) const { return (bits_ & bit(c)) != 0; }
    constexpr void add(Colour c) { bits_ |= bit(c); }
    constexpr void remove(Colour c) { bits_ &= ~bit(c); }

    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    // Smallest member, or 0 when the set is empty.
    constexpr Colour smallest() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    constexpr std::uint64_t bits() const { return bits_; }
    std::vector<Colour> to_vector() const;

    friend constexpr ColourSet operator&(ColourSet a, ColourSet b) { return ColourSet(a.bits_ & b.bits_); }
    friend constexpr ColourSet operator|(ColourSet a, ColourSet b) { return ColourSet(a.bits_ | b.bits_); }
    // Set difference a \ b.
    friend constexpr ColourSet operator-(ColourSet a, ColourSet b) { return ColourSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(ColourSet a, ColourSet b) = default;

private:
    explicit constexpr ColourSet(std::uint64_t bits) : bits_(bits) {}
    static constexpr std::uint64_t bit(Colour c) { return std::uint64_t{1} << (c - 1); }

    std::uint64_t bits_ = 0;
};

// Per-edge colour assignment over a fixed graph, with an explicit uncoloured
// state. Mutations keep the assignment proper (no two incident edges share a
// colour), so the per-vertex missing sets can be maintained incrementally.
// Owned by one solver run at a time; read-only snapshots may be shared.
class PartialEdgeColouring {
public:
    PartialEdgeColouring(const Graph& g, int palette_size);

    const Graph& graph() const { return *graph_; }
    int palette_size() const { return k_; }

    Colour colour(EdgeId e) const { return colour_[static_cast<std::size_t>(e)]; }
    bool is_coloured(EdgeId e) const { return colour(e) != uncoloured; }
    int coloured_count() const { return coloured_count_; }
    bool complete() const { return coloured_count_ == graph_->edge_count(); }
    std::span<const Colour> colours() const { return colour_; }

    // F(u): the palette colours absent from u's incident coloured edges. O(1).
    ColourSet missing(Vertex u) const;
    // F(u) ∩ F(v); u and v must be distinct.
    ColourSet common_missing(Vertex u, Vertex v) const;
    // F(u) recomputed from the edge colours alone; cross-check for the
    // incrementally maintained value.
    ColourSet missing_recomputed(Vertex u) const;

    // Colours an uncoloured edge; the colour must be missing at both
    // endpoints so the colouring stays proper.
    void assign(EdgeId e, Colour c);
    void unassign(EdgeId e);

    struct SwapResult {
        Vertex path_end;
        int path_length;
    };
    // Exchanges colours a and b along the maximal alternating path starting
    // at `start`, which must miss a. Returns the other end of the path
    // (start itself when start misses b too and the path is empty).
    // Properness is preserved; missing sets change only at the path ends.
    SwapResult kempe_swap(Vertex start, Colour a, Colour b);

private:
    void require_edge(EdgeId e) const;
    void require_colour(Colour c) const;

    const Graph* graph_;
    int k_;
    ColourSet palette_;
    std::vector<Colour> colour_;          // per edge id
    std::vector<std::uint64_t> used_;     // per vertex: bits of colours on incident edges
    int coloured_count_ = 0;
};

struct Violation {
    enum class Kind { conflict, out_of_palette, uncoloured_edge };
    Kind kind;
    Vertex vertex = -1;  // conflict: the shared endpoint
    EdgeId edge_a = -1;  // conflict: first edge; otherwise the offending edge
    EdgeId edge_b = -1;  // conflict: second edge

    std::string describe(const Graph& g) const;
};

// First violation of properness (and completeness, when required) in a raw
// per-edge colour vector, or nullopt if there is none. Works on arbitrary
// values, so colourings read from files can be checked before being trusted.
std::optional<Violation> find_violation(const Graph& g, std::span<const Colour> colours,
                                        int palette_size, bool require_complete);

inline bool verify_proper(const PartialEdgeColouring& c, bool require_complete) {
    return !find_violation(c.graph(), c.colours(), c.palette_size(), require_complete).has_value();
}

}  // namespace eck
