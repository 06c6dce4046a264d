#include "eck/generators.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eck {

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, edges);
}

Graph gen_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("gen_star needs at least one leaf");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph gen_petersen() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, edges);
}

Graph gen_few_max_degree(int core_size, int target_degree, int vertex_count, std::uint64_t seed) {
    const int p = core_size;
    const int k = target_degree;
    const int n = vertex_count;
    if (p < 1) throw std::invalid_argument("gen_few_max_degree: a nonempty graph has at least "
                                           "one max-degree vertex; core_size must be >= 1");
    if (k < 1) throw std::invalid_argument("gen_few_max_degree: target_degree must be >= 1");

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<int> degree(static_cast<std::size_t>(n > 0 ? n : 0), 0);

    if (k == 1) {
        // Degree-1 maxima come in matched pairs.
        if (p % 2 != 0)
            throw std::invalid_argument("gen_few_max_degree: with target_degree 1 the core "
                                        "size must be even");
        if (n < p)
            throw std::invalid_argument("gen_few_max_degree: need at least " + std::to_string(p) +
                                        " vertices");
        for (Vertex u = 0; u + 1 < p; u += 2) edges.emplace_back(u, u + 1);
        return Graph(n, edges);
    }

    // Each core vertex takes k distinct pool neighbours; a pool vertex can
    // absorb up to k-1 core edges, so the pool needs max(k, ceil(kp/(k-1)))
    // vertices.
    const long long pool = std::max<long long>(k, (static_cast<long long>(k) * p + k - 2) / (k - 1));
    if (n < p + pool)
        throw std::invalid_argument("gen_few_max_degree: need at least " +
                                    std::to_string(p + pool) + " vertices for core_size=" +
                                    std::to_string(p) + ", target_degree=" + std::to_string(k));

    for (Vertex core = 0; core < p; ++core) {
        for (int j = 0; j < k; ++j) {
            Vertex pool_vertex = p + static_cast<Vertex>((static_cast<long long>(core) * k + j) % pool);
            edges.emplace_back(core, pool_vertex);
            ++degree[static_cast<std::size_t>(core)];
            ++degree[static_cast<std::size_t>(pool_vertex)];
        }
    }

    // Pad with trees: every later vertex hangs off some non-core vertex that
    // still has room below degree k-1, or stays isolated if none has.
    SplitMix64 rng(seed);
    std::vector<Vertex> eligible;
    for (Vertex v = p; v < p + pool; ++v)
        if (degree[static_cast<std::size_t>(v)] <= k - 2) eligible.push_back(v);
    for (Vertex v = p + static_cast<Vertex>(pool); v < n; ++v) {
        if (!eligible.empty()) {
            std::size_t pick = static_cast<std::size_t>(rng.next_below(eligible.size()));
            Vertex u = eligible[pick];
            edges.emplace_back(u, v);
            ++degree[static_cast<std::size_t>(u)];
            ++degree[static_cast<std::size_t>(v)];
            if (degree[static_cast<std::size_t>(u)] > k - 2) {
                eligible[pick] = eligible.back();
                eligible.pop_back();
            }
        }
        if (degree[static_cast<std::size_t>(v)] <= k - 2) eligible.push_back(v);
    }

    return Graph(n, edges);
}

}  // namespace eck
