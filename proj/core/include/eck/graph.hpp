#pragma once

#include <span>
#include <utility>
#include <vector>

namespace eck {

using Vertex = int;
using EdgeId = int;

// An edge in canonical orientation (u < v). A graph's edge list is sorted
// lexicographically, so the position of an edge in Graph::edges() is a
// stable id; colourings are indexed by it.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct IncidentEdge {
    Vertex to;
    EdgeId edge;
};

// Immutable simple undirected graph on dense vertex ids 0..n-1.
// Construction rejects out-of-range endpoints, self-loops and duplicate
// edges. Safe to share across threads once built.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_list);
    Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    // Incident edges of u, sorted by neighbour id.
    std::span<const IncidentEdge> incident(Vertex u) const;
    int degree(Vertex u) const;
    // 0 for an edgeless or empty graph.
    int max_degree() const { return max_degree_; }

    bool has_vertex(Vertex u) const { return u >= 0 && u < n_; }
    bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v) >= 0; }
    // Edge id of uv, or -1 if uv is not an edge.
    EdgeId find_edge(Vertex u, Vertex v) const;

private:
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;
    std::vector<IncidentEdge> incident_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // subgraph id -> parent id, strictly increasing
};

// Subgraph induced by `vertices` (distinct, in range); vertex i of the result
// is the i-th smallest member of `vertices`.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// The max-degree vertex set X, the subgraph induced by X and its
// neighbourhood, and the remaining vertices in ascending order.
struct SemiCoreDecomposition {
    std::vector<Vertex> core;            // X = vertices of maximum degree, ascending
    InducedSubgraph semi_core;           // G[X ∪ N(X)]
    std::vector<Vertex> excluded_order;  // V \ (X ∪ N(X)), ascending

    int core_size() const { return static_cast<int>(core.size()); }
    int semi_core_size() const { return static_cast<int>(semi_core.to_parent.size()); }
};

SemiCoreDecomposition decompose(const Graph& g);

}  // namespace eck
