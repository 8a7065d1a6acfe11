#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "pace_io.hpp"

namespace halin {

/// A graph together with a certified skeleton/leaf-cycle edge partition.
/// Produced by verify_structure/recognize; the referenced Graph must outlive
/// the structure.
struct HalinStructure {
    const Graph* g = nullptr;
    std::vector<char> is_tree_edge;        // by edge id
    std::vector<char> is_leaf;             // by vertex
    std::vector<std::vector<Vertex>> tree_adj;  // skeleton adjacency, graph order
    std::vector<Vertex> cycle_order;       // leaves along the cycle
    std::vector<std::int32_t> cycle_pos;   // by vertex; -1 for internal

    std::int32_t leaf_count() const { return static_cast<std::int32_t>(cycle_order.size()); }

    HalinAnnotation annotation(Vertex root) const {
        HalinAnnotation a;
        a.root = root;
        for (std::size_t i = 0; i < g->edges().size(); ++i)
            (is_tree_edge[i] ? a.tree_edges : a.cycle_edges).push_back(g->edges()[i]);
        a.normalize();
        return a;
    }
};

}  // namespace halin
