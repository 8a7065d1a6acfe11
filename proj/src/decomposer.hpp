#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordering.hpp"
#include "tree_decomposition.hpp"

namespace halin {

/// A contiguous child range [i, j] of vertex v, decomposed with (kind 1) or
/// without (kind 2) the extra cycle neighbor past the range's last leaf.
struct AlmostHalinRef {
    int kind = 2;  // 1 or 2
    Vertex v = -1;
    int i = 1, j = 1;  // 1-based child indices, i <= j
};

/// A ref is degenerate when the child range is invalid or the subgraph would
/// be the whole graph, which only happens for kind 1 over the root's full
/// child range.
bool well_defined(const OrderedHalin& o, const AlmostHalinRef& ref);

/// kind 2: last leaf of child j's subtree; kind 1: that leaf's cycle
/// successor. Throws std::out_of_range for j outside [1, children_count(v)].
Vertex omega(const OrderedHalin& o, int kind, Vertex v, int j);

/// {v, first leaf of child i's subtree, omega(kind, v, j)}, deduplicated and
/// sorted. Throws std::invalid_argument on a degenerate ref.
std::vector<Vertex> representatives(const OrderedHalin& o, const AlmostHalinRef& ref);

struct DecompStats {
    std::vector<std::int64_t> root_calls;  // per vertex: calls rooted there
    std::int64_t total_calls = 0;
};

/// Recursive width-3 decomposition of one Almost Halin, run on an explicit
/// work stack (the child-range chain alone can reach depth n). Node ids
/// follow creation order; the designated root node is the top call's first
/// node. Throws std::invalid_argument on a degenerate ref.
TreeDecomposition tree_decomp_ah(const OrderedHalin& o, const AlmostHalinRef& top,
                                 DecompStats* stats = nullptr);

struct HtdError {
    bool not_halin = false;  // otherwise: annotation verification failure
    std::string detail;
};

/// Full driver: certify the partition (annotation if given, else exact
/// recognition), root the skeleton, compute the order, and decompose the
/// root's full child range as kind 2. The cycle edge between the first and
/// last leaf, which that subgraph excludes, is covered by the root node's
/// bag.
std::variant<TreeDecomposition, HtdError> h_td(const Graph& g,
                                               const std::optional<HalinAnnotation>& annotation,
                                               DecompStats* stats = nullptr);

}  // namespace halin
