#pragma once

#include "eck/graph.hpp"

#include <cstdint>

namespace eck {

// splitmix64 (Vigna's public-domain generator, the usual constants):
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
// Everything seeded in this project goes through it, and bounded draws use
// plain modulo, so fixtures can be regenerated bit-identically from any
// language.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, bound); bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

Graph gen_complete(int n);       // n >= 1
Graph gen_cycle(int n);          // n >= 3
Graph gen_star(int leaves);      // leaves >= 1
Graph gen_petersen();            // 10 vertices, 15 edges, 3-regular

// A graph on `vertex_count` vertices in which exactly `core_size` vertices
// have the maximum degree `target_degree` and every other vertex has smaller
// degree: a core wired to a shared attachment pool, padded with random trees
// of bounded degree. Deterministic for a fixed seed.
Graph gen_few_max_degree(int core_size, int target_degree, int vertex_count, std::uint64_t seed);

}  // namespace eck
