#pragma once

#include <cstdint>

#include "graph.hpp"
#include "pace_io.hpp"

namespace halin {

struct GenParams {
    std::uint64_t n_min = 4;
    std::uint64_t n_max = 4;
    std::uint64_t seed = 0;
};

struct GenResult {
    Graph graph;
    HalinAnnotation annotation;  // carries the effective seed
    std::uint64_t sampled_n = 0;  // tree size N before the pendant fix
    std::uint64_t pendants_added = 0;
    std::uint64_t effective_seed = 0;
};

/// Builds a random Halin instance:
///   1. N uniform in [n_min, n_max];
///   2. random recursive tree: vertex i attaches to a uniform pick in [0, i);
///   3. a pendant vertex for every tree vertex of degree two (degrees taken
///      once, on the step-2 tree);
///   4. DFS from vertex 0 in adjacency-insertion order; leaves in visit order
///      become the cycle, closed last-to-first;
///   5. uniform random relabeling of all vertices.
/// Fully deterministic given the seed. The annotation records the relabeled
/// tree/cycle edges, the relabeled vertex 0 as root candidate, and the seed.
///
/// Throws std::invalid_argument unless 4 <= n_min <= n_max.
GenResult generate_halin(const GenParams& params);

}  // namespace halin
