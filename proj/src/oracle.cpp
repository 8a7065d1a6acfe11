#include "oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace halin {

namespace {

using Mask = std::uint32_t;

// Vertices of V \ (S + v) adjacent to the component of v in the graph
// induced on S + {v}: the bag size v would get if eliminated right after S.
int elimination_degree(const std::vector<Mask>& adj, Mask eliminated, int v) {
    const Mask inside = eliminated | (Mask{1} << v);
    Mask reach = Mask{1} << v;
    Mask frontier = reach;
    Mask seen_nbrs = 0;
    while (frontier) {
        Mask nbrs = 0;
        Mask f = frontier;
        while (f) {
            int w = std::countr_zero(f);
            f &= f - 1;
            nbrs |= adj[static_cast<std::size_t>(w)];
        }
        seen_nbrs |= nbrs;
        frontier = (nbrs & inside) & ~reach;
        reach |= frontier;
    }
    return std::popcount(seen_nbrs & ~inside);
}

// Depth-first search for an elimination order with all elimination degrees
// <= k; `failed` memoizes eliminated-subset states with no completion.
bool order_with_width(const std::vector<Mask>& adj, int n, int k, Mask eliminated,
                      std::unordered_set<Mask>& failed, std::vector<int>& order) {
    if (std::popcount(eliminated) == n) return true;
    if (failed.contains(eliminated)) return false;
    for (int v = 0; v < n; ++v) {
        if (eliminated & (Mask{1} << v)) continue;
        if (elimination_degree(adj, eliminated, v) > k) continue;
        order.push_back(v);
        if (order_with_width(adj, n, k, eliminated | (Mask{1} << v), failed, order)) return true;
        order.pop_back();
    }
    failed.insert(eliminated);
    return false;
}

TreeDecomposition witness_from_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.n();
    // Replay the elimination, recording each vertex's bag and the neighbor
    // eliminated soonest after it (that bag contains the rest, so attaching
    // there keeps every condition).
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    for (Edge e : g.edges()) {
        adj[e.first] |= Mask{1} << e.second;
        adj[e.second] |= Mask{1} << e.first;
    }
    std::vector<int> position(static_cast<std::size_t>(n), 0);
    for (int idx = 0; idx < n; ++idx) position[static_cast<std::size_t>(order[idx])] = idx;

    TreeDecomposition td;
    std::vector<std::int32_t> node_of(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> bag;
    for (int idx = 0; idx < n; ++idx) {
        int v = order[static_cast<std::size_t>(idx)];
        Mask nbrs = adj[static_cast<std::size_t>(v)];
        bag.clear();
        bag.push_back(v);
        int attach_to = -1;
        Mask rest = nbrs;
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            bag.push_back(w);
            if (attach_to == -1 || position[static_cast<std::size_t>(w)] <
                                       position[static_cast<std::size_t>(attach_to)])
                attach_to = w;
        }
        node_of[static_cast<std::size_t>(v)] = td.add_bag(bag);
        // Fill: neighbors of v become a clique, then v disappears.
        Mask a = nbrs;
        while (a) {
            int p = std::countr_zero(a);
            a &= a - 1;
            adj[static_cast<std::size_t>(p)] |= nbrs & ~(Mask{1} << p);
            adj[static_cast<std::size_t>(p)] &= ~(Mask{1} << v);
        }
        if (attach_to == -1 && idx + 1 < n)
            attach_to = order[static_cast<std::size_t>(idx + 1)];  // isolated: chain on
        if (attach_to != -1)
            td.edges.emplace_back(node_of[static_cast<std::size_t>(v)], -1 - attach_to);
    }
    // Second pass: bags of later-eliminated vertices now exist.
    for (auto& [from, to] : td.edges) to = node_of[static_cast<std::size_t>(-1 - to)];
    td.root = node_of[static_cast<std::size_t>(order.back())];
    return td;
}

}  // namespace

OracleResult exact_treewidth(const Graph& g, int limit) {
    if (limit > 30) throw std::invalid_argument("limit must be at most 30");
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (g.n() > limit)
        throw std::invalid_argument("graph has " + std::to_string(g.n()) +
                                    " vertices, above the limit of " + std::to_string(limit));
    const int n = g.n();
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    for (Edge e : g.edges()) {
        adj[e.first] |= Mask{1} << e.second;
        adj[e.second] |= Mask{1} << e.first;
    }
    for (int k = 0; k < n; ++k) {
        std::unordered_set<Mask> failed;
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(n));
        if (order_with_width(adj, n, k, 0, failed, order)) {
            OracleResult res;
            res.width = k;
            res.witness = witness_from_order(g, order);
            return res;
        }
    }
    // Unreachable: k = n-1 always admits any order.
    throw std::logic_error("no elimination order found");
}

}  // namespace halin
