#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace halin {

/// A tree of bags over 0-based node ids. Bags are stored flattened so that
/// million-node decompositions stay compact; bag contents are sorted and
/// duplicate-free. The node link structure is whatever was built or parsed;
/// the validator decides whether it actually forms a tree.
struct TreeDecomposition {
    std::vector<std::int32_t> bag_off{0};
    std::vector<Vertex> bag_values;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    std::int32_t root = 0;

    std::int32_t node_count() const { return static_cast<std::int32_t>(bag_off.size()) - 1; }

    std::span<const Vertex> bag(std::int32_t node) const {
        return {bag_values.data() + bag_off[node],
                bag_values.data() + bag_off[node + 1]};
    }

    /// Appends a bag (sorted, deduplicated) and returns the new node id.
    std::int32_t add_bag(std::span<const Vertex> vertices);

    /// Max bag size minus one; -1 for an empty decomposition.
    int width() const;

    bool operator==(const TreeDecomposition&) const = default;
};

}  // namespace halin
