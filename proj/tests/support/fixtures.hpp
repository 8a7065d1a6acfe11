#pragma once

// Hand-built Halin instances shared across the test suites.

#include <utility>
#include <vector>

#include "graph.hpp"
#include "pace_io.hpp"
#include "tree_decomposition.hpp"

namespace testsupport {

inline std::vector<halin::Vertex> bag_vec(const halin::TreeDecomposition& td, std::int32_t node) {
    auto b = td.bag(node);
    return {b.begin(), b.end()};
}

struct Instance {
    halin::Graph graph;
    halin::HalinAnnotation annotation;
};

// Wheel with `rim` outer vertices: hub 0, rim 1..rim. wheel(3) is K4.
inline Instance wheel(int rim) {
    std::vector<halin::Edge> tree, cycle;
    for (int i = 1; i <= rim; ++i) tree.push_back({0, i});
    for (int i = 1; i < rim; ++i) cycle.push_back({i, i + 1});
    cycle.push_back({rim, 1});
    std::vector<halin::Edge> all = tree;
    all.insert(all.end(), cycle.begin(), cycle.end());
    Instance ins{halin::Graph::build(rim + 1, all), {}};
    ins.annotation.root = 0;
    ins.annotation.tree_edges = tree;
    ins.annotation.cycle_edges = cycle;
    ins.annotation.normalize();
    return ins;
}

// Caterpillar skeleton: spine 0..spine-1, a pendant leaf on every spine
// vertex, and an extra leaf on each end so no spine vertex has degree two.
inline Instance caterpillar(int spine) {
    std::vector<halin::Edge> tree, cycle;
    int next = spine;
    std::vector<int> leaves;
    int end_left = next++;
    tree.push_back({0, end_left});
    leaves.push_back(end_left);
    for (int i = 0; i < spine; ++i) {
        if (i + 1 < spine) tree.push_back({i, i + 1});
        int leaf = next++;
        tree.push_back({i, leaf});
        leaves.push_back(leaf);
    }
    int end_right = next++;
    tree.push_back({spine - 1, end_right});
    leaves.push_back(end_right);
    for (std::size_t i = 0; i + 1 < leaves.size(); ++i) cycle.push_back({leaves[i], leaves[i + 1]});
    cycle.push_back({leaves.back(), leaves.front()});
    std::vector<halin::Edge> all = tree;
    all.insert(all.end(), cycle.begin(), cycle.end());
    Instance ins{halin::Graph::build(next, all), {}};
    ins.annotation.root = 0;
    ins.annotation.tree_edges = tree;
    ins.annotation.cycle_edges = cycle;
    ins.annotation.normalize();
    return ins;
}

// Three-level instance: root 0 with children {internal 1, internal 2,
// leaf 3}; 1 has leaves {4,5}; 2 has {leaf 6, internal 7}; 7 has leaves
// {8,9}. Ten vertices, six leaves.
inline Instance three_level() {
    std::vector<halin::Edge> tree = {{0, 1}, {0, 2}, {0, 3}, {1, 4},
                                     {1, 5}, {2, 6}, {2, 7}, {7, 8}, {7, 9}};
    std::vector<halin::Edge> cycle = {{4, 5}, {5, 6}, {6, 8}, {8, 9}, {9, 3}, {3, 4}};
    std::vector<halin::Edge> all = tree;
    all.insert(all.end(), cycle.begin(), cycle.end());
    Instance ins{halin::Graph::build(10, all), {}};
    ins.annotation.root = 0;
    ins.annotation.tree_edges = tree;
    ins.annotation.cycle_edges = cycle;
    ins.annotation.normalize();
    return ins;
}

// Same skeleton as a valid instance, but the cycle visits the leaves of the
// two inner subtrees interleaved, which no embedding can realize.
// Skeleton: root 0 with children {1, 2, leaf 3}; 1 has leaves {4,5}; 2 has
// leaves {6,7}. Good cycle: 4 5 6 7 3. Bad cycle: 4 6 5 7 3.
inline Instance scrambled_cycle(bool realizable) {
    std::vector<halin::Edge> tree = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}};
    std::vector<halin::Edge> cycle;
    if (realizable)
        cycle = {{4, 5}, {5, 6}, {6, 7}, {7, 3}, {3, 4}};
    else
        cycle = {{4, 6}, {6, 5}, {5, 7}, {7, 3}, {3, 4}};
    std::vector<halin::Edge> all = tree;
    all.insert(all.end(), cycle.begin(), cycle.end());
    Instance ins{halin::Graph::build(8, all), {}};
    ins.annotation.root = 0;
    ins.annotation.tree_edges = tree;
    ins.annotation.cycle_edges = cycle;
    ins.annotation.normalize();
    return ins;
}

}  // namespace testsupport
