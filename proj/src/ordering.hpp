#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halin_structure.hpp"

namespace halin {

/// Rooted, reordered view of a HalinStructure.
///
/// x-values: a leaf's position along the cycle walked from the start leaf
/// toward its cycle neighbor below a different root child; an internal
/// vertex's x is the minimum over its subtree's leaves. Children are ordered
/// so a depth-first search from the root meets the leaves in x order, and
/// every subtree's leaf x-values form the contiguous interval [a, b].
struct OrderedHalin {
    const HalinStructure* s = nullptr;
    Vertex root = -1;
    Vertex start_leaf = -1;  // x = 0
    Vertex end_leaf = -1;    // x = leaf_count-1, cycle neighbor of start_leaf

    std::vector<Vertex> parent;                 // -1 at root
    std::vector<std::vector<Vertex>> children;  // in x order
    std::vector<std::int32_t> x;
    std::vector<std::int32_t> a, b;             // subtree leaf interval
    std::vector<std::int32_t> height;
    std::vector<Vertex> leaf_by_x;
    std::vector<Vertex> first_leaf, last_leaf;  // leaf_by_x[a], leaf_by_x[b]
    std::uint64_t climb_steps = 0;              // ancestor-walk work, <= 2n

    std::int32_t leaf_count() const { return static_cast<std::int32_t>(leaf_by_x.size()); }
    int children_count(Vertex v) const { return static_cast<int>(children[v].size()); }

    // i is 1-based; throws std::out_of_range outside [1, children_count(v)].
    Vertex child_at(Vertex v, int i) const;
    Vertex last_child(Vertex v) const;

    Vertex subtree_first_leaf(Vertex v) const { return first_leaf[v]; }
    Vertex subtree_last_leaf(Vertex v) const { return last_leaf[v]; }

    // For leaves only; throws std::out_of_range on an internal vertex.
    Vertex cycle_successor(Vertex u) const;
    Vertex cycle_predecessor(Vertex u) const;
};

/// Lowest-id internal vertex with skeleton degree at least three.
Vertex select_root(const HalinStructure& s);

/// A cycle-adjacent leaf pair (v, w) whose lowest common ancestor is the
/// root: v lies in the subtree of the root's first child (graph adjacency
/// order), w outside it; the pair is the first such along the cycle walk.
std::pair<Vertex, Vertex> select_start_pair(const HalinStructure& s, Vertex root);

struct OrderResult {
    std::optional<OrderedHalin> order;
    Vertex witness = -1;       // vertex whose subtree breaks contiguity
    std::string detail;        // empty on success
    bool ok() const { return order.has_value(); }
};

/// Builds the full ordered view, or reports ORDER_NOT_REALIZABLE when some
/// subtree's leaves are not contiguous on the cycle. All traversals use
/// explicit stacks; skeleton depth can reach the vertex count.
OrderResult compute_order(const HalinStructure& s, Vertex root);

}  // namespace halin
