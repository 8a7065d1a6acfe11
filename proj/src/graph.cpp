#include "graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace halin {

namespace {

std::uint64_t edge_key(Edge e) {
    e = normalized(e);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.first)) << 32) |
           static_cast<std::uint32_t>(e.second);
}

}  // namespace

Graph Graph::build(Vertex n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.edges_.reserve(edges.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        auto [u, v] = e;
        const std::string pair =
            "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + pair);
        if (u == v) throw std::invalid_argument("self-loop: " + pair);
        if (!seen.insert(edge_key(e)).second)
            throw std::invalid_argument("duplicate edge: " + pair);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.edges_.push_back(e);
    }
    return g;
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    Vertex reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

bool Graph::is_tree() const { return m() == n_ - 1 && connected(); }

bool same_graph(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    auto canon = [](const Graph& g) {
        std::vector<Edge> es;
        es.reserve(g.edges().size());
        for (Edge e : g.edges()) es.push_back(normalized(e));
        std::sort(es.begin(), es.end());
        return es;
    };
    return canon(a) == canon(b);
}

}  // namespace halin
