#pragma once

#include <string>

#include "graph.hpp"
#include "tree_decomposition.hpp"

namespace halin {

struct ConditionVerdict {
    bool ok = true;
    Vertex witness_vertex = -1;
    Edge witness_edge{-1, -1};
};

struct ValidationReport {
    bool shape_ok = true;       // node links form a tree; all ids in range
    std::string shape_detail;
    ConditionVerdict c1;        // every vertex in some bag
    ConditionVerdict c2;        // every edge inside some bag
    ConditionVerdict c3;        // per-vertex occurrences connected
    int width = -1;

    bool accepted() const { return shape_ok && c1.ok && c2.ok && c3.ok; }
    std::string format() const;  // multi-line report, 1-based ids
};

/// Checks all four verdicts (no short-circuiting) and the width.
/// Connectivity per vertex is decided by counting: with a tree of nodes, the
/// occurrence set of a vertex is connected iff the number of node edges
/// whose both bags contain it is exactly occurrences-1.
ValidationReport validate(const Graph& g, const TreeDecomposition& td);

}  // namespace halin
