#include "ordering.hpp"

#include <cassert>
#include <stdexcept>

namespace halin {

Vertex OrderedHalin::child_at(Vertex v, int i) const {
    if (i < 1 || i > children_count(v))
        throw std::out_of_range("child index " + std::to_string(i) + " out of range for vertex " +
                                std::to_string(v));
    return children[v][static_cast<std::size_t>(i - 1)];
}

Vertex OrderedHalin::last_child(Vertex v) const {
    if (children[v].empty())
        throw std::out_of_range("vertex " + std::to_string(v) + " has no children");
    return children[v].back();
}

Vertex OrderedHalin::cycle_successor(Vertex u) const {
    if (!s->is_leaf[u])
        throw std::out_of_range("cycle successor of internal vertex " + std::to_string(u));
    return leaf_by_x[static_cast<std::size_t>((x[u] + 1) % leaf_count())];
}

Vertex OrderedHalin::cycle_predecessor(Vertex u) const {
    if (!s->is_leaf[u])
        throw std::out_of_range("cycle predecessor of internal vertex " + std::to_string(u));
    return leaf_by_x[static_cast<std::size_t>((x[u] + leaf_count() - 1) % leaf_count())];
}

Vertex select_root(const HalinStructure& s) {
    for (Vertex v = 0; v < s.g->n(); ++v)
        if (!s.is_leaf[v] && s.tree_adj[v].size() >= 3) return v;
    return -1;  // impossible for a certified structure
}

std::pair<Vertex, Vertex> select_start_pair(const HalinStructure& s, Vertex root) {
    // Color the subtree of the root's first child, then scan the cycle for
    // the first edge with exactly one colored endpoint.
    std::vector<char> colored(static_cast<std::size_t>(s.g->n()), 0);
    Vertex first_child = s.tree_adj[root][0];
    std::vector<Vertex> stack{first_child};
    colored[first_child] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : s.tree_adj[v]) {
            if (w == root || colored[w]) continue;
            colored[w] = 1;
            stack.push_back(w);
        }
    }
    const auto L = static_cast<std::size_t>(s.leaf_count());
    for (std::size_t k = 0; k < L; ++k) {
        Vertex p = s.cycle_order[k];
        Vertex q = s.cycle_order[(k + 1) % L];
        if (colored[p] != colored[q])
            return colored[p] ? std::pair{p, q} : std::pair{q, p};
    }
    return {-1, -1};  // impossible: the cycle crosses every subtree boundary
}

OrderResult compute_order(const HalinStructure& s, Vertex root) {
    const Vertex n = s.g->n();
    const std::int32_t L = s.leaf_count();
    OrderedHalin o;
    o.s = &s;
    o.root = root;

    auto [v, w] = select_start_pair(s, root);
    o.start_leaf = v;
    o.end_leaf = w;

    // Parents via DFS over the skeleton.
    o.parent.assign(static_cast<std::size_t>(n), -1);
    {
        std::vector<Vertex> stack{root};
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        seen[root] = 1;
        while (!stack.empty()) {
            Vertex y = stack.back();
            stack.pop_back();
            for (Vertex z : s.tree_adj[y]) {
                if (seen[z]) continue;
                seen[z] = 1;
                o.parent[z] = y;
                stack.push_back(z);
            }
        }
    }

    // Leaf x-values: walk the cycle from v away from w.
    o.x.assign(static_cast<std::size_t>(n), -1);
    o.leaf_by_x.assign(static_cast<std::size_t>(L), -1);
    {
        std::int32_t pos_v = s.cycle_pos[v];
        std::int32_t dir = (s.cycle_order[static_cast<std::size_t>((pos_v + 1) % L)] == w) ? -1 : 1;
        assert(s.cycle_order[static_cast<std::size_t>((pos_v + L + dir) % L)] != w || L == 2);
        for (std::int32_t k = 0; k < L; ++k) {
            Vertex leaf = s.cycle_order[static_cast<std::size_t>(((pos_v + dir * k) % L + L) % L)];
            o.x[leaf] = k;
            o.leaf_by_x[static_cast<std::size_t>(k)] = leaf;
        }
        assert(o.x[w] == L - 1);
    }

    // Internal x-values: climb from each leaf in x order, setting each
    // ancestor once and stopping at the first already-set one.
    for (std::int32_t k = 0; k < L; ++k) {
        Vertex y = o.parent[o.leaf_by_x[static_cast<std::size_t>(k)]];
        while (y != -1 && o.x[y] == -1) {
            ++o.climb_steps;
            o.x[y] = k;
            y = o.parent[y];
        }
    }

    // Child lists in x order, by the same climb: link y under its parent the
    // first time a leaf below y is reached.
    o.children.assign(static_cast<std::size_t>(n), {});
    {
        std::vector<char> linked(static_cast<std::size_t>(n), 0);
        for (std::int32_t k = 0; k < L; ++k) {
            Vertex y = o.leaf_by_x[static_cast<std::size_t>(k)];
            while (y != root && !linked[y]) {
                ++o.climb_steps;
                linked[y] = 1;
                o.children[o.parent[y]].push_back(y);
                y = o.parent[y];
            }
        }
    }

    // Post-order pass: intervals, heights, and the contiguity check.
    o.a.assign(static_cast<std::size_t>(n), 0);
    o.b.assign(static_cast<std::size_t>(n), 0);
    o.height.assign(static_cast<std::size_t>(n), 0);
    {
        std::vector<std::pair<Vertex, std::uint32_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [y, idx] = stack.back();
            if (s.is_leaf[y]) {
                o.a[y] = o.b[y] = o.x[y];
                o.height[y] = 0;
                stack.pop_back();
                continue;
            }
            if (idx < o.children[y].size()) {
                Vertex c = o.children[y][idx];
                ++idx;
                stack.emplace_back(c, 0);
                continue;
            }
            const auto& kids = o.children[y];
            o.a[y] = o.a[kids.front()];
            o.b[y] = o.b[kids.back()];
            std::int32_t h = 0;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                h = std::max(h, o.height[kids[i]] + 1);
                if (i + 1 < kids.size() && o.b[kids[i]] + 1 != o.a[kids[i + 1]]) {
                    OrderResult fail;
                    fail.witness = y;
                    fail.detail = "subtree leaves of vertex " + std::to_string(y) +
                                  " are not contiguous on the cycle";
                    return fail;
                }
            }
            o.height[y] = h;
            assert(o.a[y] == o.x[y]);
            stack.pop_back();
        }
    }

    o.first_leaf.assign(static_cast<std::size_t>(n), -1);
    o.last_leaf.assign(static_cast<std::size_t>(n), -1);
    for (Vertex y = 0; y < n; ++y) {
        o.first_leaf[y] = o.leaf_by_x[static_cast<std::size_t>(o.a[y])];
        o.last_leaf[y] = o.leaf_by_x[static_cast<std::size_t>(o.b[y])];
    }

    OrderResult ok;
    ok.order = std::move(o);
    return ok;
}

}  // namespace halin
