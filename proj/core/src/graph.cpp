#include "eck/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eck {

namespace {

std::string pair_str(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_list) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    n_ = vertex_count;

    edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("edge " + pair_str(a, b) + ": vertex out of range [0," +
                                        std::to_string(n_) + ")");
        if (a == b)
            throw std::invalid_argument("edge " + pair_str(a, b) + ": self-loops are not allowed");
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge " + pair_str(dup->u, dup->v));

    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[static_cast<std::size_t>(e.u) + 1];
        ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (int u = 0; u < n_; ++u) offsets_[static_cast<std::size_t>(u) + 1] += offsets_[u];

    // Filling in sorted edge order leaves each incidence list sorted by
    // neighbour id: entries with to < u arrive from the (to,u) block, entries
    // with to > u from the (u,to) block, both ascending.
    incident_.resize(edges_.size() * 2);
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edge_count(); ++id) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        incident_[static_cast<std::size_t>(cursor[e.u]++)] = {e.v, id};
        incident_[static_cast<std::size_t>(cursor[e.v]++)] = {e.u, id};
    }

    max_degree_ = 0;
    for (int u = 0; u < n_; ++u) max_degree_ = std::max(max_degree_, degree(u));
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edge_list)
    : Graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size())) {}

std::span<const IncidentEdge> Graph::incident(Vertex u) const {
    if (!has_vertex(u))
        throw std::invalid_argument("vertex " + std::to_string(u) + " out of range [0," +
                                    std::to_string(n_) + ")");
    return {incident_.data() + offsets_[u], incident_.data() + offsets_[static_cast<std::size_t>(u) + 1]};
}

int Graph::degree(Vertex u) const {
    if (!has_vertex(u))
        throw std::invalid_argument("vertex " + std::to_string(u) + " out of range [0," +
                                    std::to_string(n_) + ")");
    return offsets_[static_cast<std::size_t>(u) + 1] - offsets_[u];
}

EdgeId Graph::find_edge(Vertex u, Vertex v) const {
    auto inc = incident(u);
    if (!has_vertex(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    auto it = std::lower_bound(inc.begin(), inc.end(), v,
                               [](const IncidentEdge& ie, Vertex x) { return ie.to < x; });
    if (it != inc.end() && it->to == v) return it->edge;
    return -1;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!g.has_vertex(sorted[i]))
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(sorted[i]) +
                                        " not in graph");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("induced_subgraph: duplicate vertex " +
                                        std::to_string(sorted[i]));
    }

    std::vector<int> to_local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) to_local[sorted[i]] = static_cast<int>(i);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : sorted)
        for (const IncidentEdge& ie : g.incident(u))
            if (u < ie.to && to_local[ie.to] >= 0) edges.emplace_back(to_local[u], to_local[ie.to]);

    return {Graph(static_cast<int>(sorted.size()), edges), std::move(sorted)};
}

SemiCoreDecomposition decompose(const Graph& g) {
    const int delta = g.max_degree();
    const int n = g.vertex_count();

    SemiCoreDecomposition dec;
    std::vector<char> in_semi_core(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) != delta) continue;
        dec.core.push_back(u);
        in_semi_core[u] = 1;
        for (const IncidentEdge& ie : g.incident(u)) in_semi_core[ie.to] = 1;
    }

    std::vector<Vertex> semi_core_vertices;
    for (Vertex u = 0; u < n; ++u) {
        if (in_semi_core[u])
            semi_core_vertices.push_back(u);
        else
            dec.excluded_order.push_back(u);
    }
    dec.semi_core = induced_subgraph(g, semi_core_vertices);
    return dec;
}

}  // namespace eck
