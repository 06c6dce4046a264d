#pragma once

#include "eck/generators.hpp"
#include "eck/graph.hpp"

#include <utility>
#include <vector>

namespace eck::test {

// All C(n,2) vertex pairs of an n-vertex graph, in canonical order.
inline std::vector<std::pair<Vertex, Vertex>> all_pairs(int n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

// Calls fn(graph) for every labelled simple graph on exactly n vertices
// (2^C(n,2) of them); n must stay small.
template <typename Fn>
void for_each_graph(int n, Fn&& fn) {
    const auto pairs = all_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        fn(Graph(n, edges));
    }
}

// Seeded random graph with (at most) the requested number of edges; repeated
// pair draws that collide are skipped, so very dense requests may fall short.
inline Graph random_graph(int n, int edge_target, SplitMix64& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    int attempts = 0;
    while (static_cast<int>(edges.size()) < edge_target && attempts < 20 * edge_target + 100) {
        ++attempts;
        Vertex u = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
        Vertex v = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        auto idx = static_cast<std::size_t>(std::min(u, v)) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(std::max(u, v));
        if (present[idx]) continue;
        present[idx] = 1;
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

}  // namespace eck::test
