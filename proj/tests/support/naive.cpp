#include "naive.hpp"

#include <algorithm>
#include <numeric>

namespace testsupport {

using halin::Edge;
using halin::Graph;
using halin::Vertex;

namespace {

struct MiniDsu {
    std::vector<int> p;
    explicit MiniDsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int v) { return p[v] == v ? v : p[v] = find(p[v]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// Walks the subset as a cycle; empty result when it is not one simple cycle
// covering all its vertices.
std::vector<Vertex> cycle_vertices(const std::vector<Edge>& cyc, Vertex n) {
    std::vector<std::vector<Vertex>> adj(n);
    for (Edge e : cyc) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    Vertex start = -1;
    int touched = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (adj[v].empty()) continue;
        ++touched;
        if (adj[v].size() != 2) return {};
        if (start == -1) start = v;
    }
    if (start == -1 || touched != static_cast<int>(cyc.size())) return {};
    std::vector<Vertex> order{start};
    Vertex prev = start, cur = adj[start][0];
    while (cur != start) {
        order.push_back(cur);
        Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
    }
    if (static_cast<int>(order.size()) != touched) return {};
    return order;
}

}  // namespace

bool arcs_realizable(Vertex n, const std::vector<Edge>& tree_edges,
                     const std::vector<Vertex>& cycle_order) {
    std::vector<std::vector<Vertex>> adj(n);
    for (Edge e : tree_edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < cycle_order.size(); ++i) pos[cycle_order[i]] = static_cast<int>(i);
    const int L = static_cast<int>(cycle_order.size());

    for (Edge cut : tree_edges) {
        // Side of cut.first when the edge is removed.
        std::vector<char> side(n, 0);
        std::vector<Vertex> stack{cut.first};
        side[cut.first] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[v]) {
                if (side[w] || (v == cut.first && w == cut.second)) continue;
                side[w] = 1;
                stack.push_back(w);
            }
        }
        // Leaves on side 1 must be one cyclic arc: exactly one marked
        // position whose cyclic successor is unmarked.
        std::vector<char> marked(L, 0);
        int count = 0;
        for (Vertex v : cycle_order)
            if (side[v]) {
                marked[pos[v]] = 1;
                ++count;
            }
        if (count == 0 || count == L) continue;
        int boundaries = 0;
        for (int i = 0; i < L; ++i)
            if (marked[i] && !marked[(i + 1) % L]) ++boundaries;
        if (boundaries != 1) return false;
    }
    return true;
}

std::optional<halin::HalinAnnotation> naive_find_halin(const Graph& g) {
    const Vertex n = g.n();
    const auto m = static_cast<int>(g.m());
    const int L = static_cast<int>(g.m()) - n + 1;
    if (n < 4 || L < 3 || L > m) return std::nullopt;

    std::vector<int> pick(m, 0);
    std::fill(pick.begin(), pick.begin() + L, 1);
    std::sort(pick.begin(), pick.end());  // lowest lexicographic combination first

    do {
        std::vector<Edge> cyc, tree;
        for (int i = 0; i < m; ++i) (pick[i] ? cyc : tree).push_back(g.edges()[i]);

        std::vector<Vertex> order = cycle_vertices(cyc, n);
        if (order.empty()) continue;

        if (static_cast<Vertex>(tree.size()) != n - 1) continue;
        MiniDsu dsu(n);
        bool acyclic = true;
        for (Edge e : tree)
            if (!dsu.unite(e.first, e.second)) {
                acyclic = false;
                break;
            }
        if (!acyclic) continue;

        std::vector<int> deg(n, 0);
        for (Edge e : tree) {
            ++deg[e.first];
            ++deg[e.second];
        }
        bool shape_ok = true;
        std::vector<char> on_cycle(n, 0);
        for (Vertex v : order) on_cycle[v] = 1;
        for (Vertex v = 0; v < n; ++v) {
            if (deg[v] == 2) shape_ok = false;
            if ((deg[v] == 1) != static_cast<bool>(on_cycle[v])) shape_ok = false;
        }
        if (!shape_ok) continue;

        if (!arcs_realizable(n, tree, order)) continue;

        halin::HalinAnnotation a;
        a.root = 0;
        a.tree_edges = tree;
        a.cycle_edges = cyc;
        a.normalize();
        return a;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return std::nullopt;
}

}  // namespace testsupport
