#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace halin {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline Edge normalized(Edge e) { return e.first <= e.second ? e : Edge{e.second, e.first}; }

/// Undirected simple graph over vertex ids 0..n-1.
///
/// Adjacency lists keep edge-insertion order, and that order is part of the
/// value: the ordering stage derives child orders from it. Instances are
/// immutable after build().
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate edges (either
    /// orientation) or endpoints outside [0, n). The message names the
    /// offending pair.
    static Graph build(Vertex n, const std::vector<Edge>& edges);

    Vertex n() const { return n_; }
    std::int64_t m() const { return static_cast<std::int64_t>(edges_.size()); }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    /// Edges in insertion order; the index of an edge in this list is its id.
    const std::vector<Edge>& edges() const { return edges_; }

    bool connected() const;
    bool is_tree() const;

private:
    Vertex n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/// Same vertex count and same edge set (adjacency order ignored).
bool same_graph(const Graph& a, const Graph& b);

}  // namespace halin
