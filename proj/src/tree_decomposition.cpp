#include "tree_decomposition.hpp"

#include <algorithm>

namespace halin {

std::int32_t TreeDecomposition::add_bag(std::span<const Vertex> vertices) {
    std::int32_t id = node_count();
    std::size_t start = bag_values.size();
    bag_values.insert(bag_values.end(), vertices.begin(), vertices.end());
    std::sort(bag_values.begin() + start, bag_values.end());
    bag_values.erase(std::unique(bag_values.begin() + start, bag_values.end()),
                     bag_values.end());
    bag_off.push_back(static_cast<std::int32_t>(bag_values.size()));
    return id;
}

int TreeDecomposition::width() const {
    int max_size = 0;
    for (std::int32_t t = 0; t < node_count(); ++t)
        max_size = std::max(max_size, static_cast<int>(bag_off[t + 1] - bag_off[t]));
    return max_size - 1;
}

}  // namespace halin
