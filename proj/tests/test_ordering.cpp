#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "fixtures.hpp"
#include "generator.hpp"
#include "ordering.hpp"
#include "recognizer.hpp"

using namespace halin;
using testsupport::Instance;

namespace {

OrderedHalin ordered(const HalinStructure& s) {
    OrderResult r = compute_order(s, select_root(s));
    REQUIRE(r.ok());
    return std::move(*r.order);
}

// Leaves met by an explicit DFS from the root following the rebuilt child
// lists.
std::vector<Vertex> dfs_leaf_order(const OrderedHalin& o) {
    std::vector<Vertex> out;
    std::vector<std::pair<Vertex, std::size_t>> stack{{o.root, 0}};
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (o.s->is_leaf[v]) {
            out.push_back(v);
            stack.pop_back();
            continue;
        }
        if (idx == o.children[v].size()) {
            stack.pop_back();
            continue;
        }
        Vertex c = o.children[v][idx];
        ++idx;
        stack.emplace_back(c, 0);
    }
    return out;
}

Vertex lca(const OrderedHalin& o, Vertex a, Vertex b) {
    std::vector<char> seen(o.parent.size(), 0);
    for (Vertex x = a; x != -1; x = o.parent[x]) seen[x] = 1;
    for (Vertex x = b; x != -1; x = o.parent[x])
        if (seen[x]) return x;
    return -1;
}

}  // namespace

TEST_CASE("wheel ordering from the hub") {
    Instance k4 = testsupport::wheel(3);
    VerifyResult vr = verify_structure(k4.graph, k4.annotation);
    REQUIRE(vr.ok());
    const HalinStructure& s = *vr.structure;

    CHECK(select_root(s) == 0);
    OrderedHalin o = ordered(s);

    CHECK(o.x[o.start_leaf] == 0);
    CHECK(o.x[o.end_leaf] == o.leaf_count() - 1);
    CHECK(o.leaf_by_x == std::vector<Vertex>{1, 3, 2});
    CHECK(o.children[0] == std::vector<Vertex>{1, 3, 2});

    CHECK(o.child_at(0, 1) == 1);
    CHECK(o.last_child(0) == 2);
    CHECK_THROWS_AS(o.child_at(0, 4), std::out_of_range);
    CHECK_THROWS_AS(o.child_at(0, 0), std::out_of_range);
    CHECK_THROWS_AS(o.last_child(1), std::out_of_range);

    CHECK(o.cycle_successor(o.end_leaf) == o.start_leaf);
    CHECK(o.cycle_predecessor(o.start_leaf) == o.end_leaf);
    CHECK_THROWS_AS(o.cycle_successor(0), std::out_of_range);

    CHECK(o.subtree_first_leaf(0) == o.start_leaf);
    CHECK(o.subtree_last_leaf(0) == o.end_leaf);
    CHECK(o.height[0] == 1);
}

TEST_CASE("three-level instance has contiguous intervals everywhere") {
    Instance ins = testsupport::three_level();
    VerifyResult vr = verify_structure(ins.graph, ins.annotation);
    REQUIRE(vr.ok());
    OrderedHalin o = ordered(*vr.structure);

    const Vertex n = ins.graph.n();
    for (Vertex y = 0; y < n; ++y) {
        int leaves_in_subtree = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (!vr.structure->is_leaf[u]) continue;
            Vertex x = u;
            while (x != -1 && x != y) x = o.parent[x];
            if (x == y) ++leaves_in_subtree;
        }
        CHECK(o.b[y] - o.a[y] + 1 == leaves_in_subtree);
        const auto& kids = o.children[y];
        for (std::size_t i = 0; i + 1 < kids.size(); ++i)
            CHECK(o.b[kids[i]] + 1 == o.a[kids[i + 1]]);
        if (!kids.empty()) {
            CHECK(o.a[y] == o.a[kids.front()]);
            CHECK(o.b[y] == o.b[kids.back()]);
        }
    }
    CHECK(o.height[o.root] == 3);

    // Any internal root of degree >= 3 orders successfully.
    OrderResult other = compute_order(*vr.structure, 2);
    CHECK(other.ok());
}

TEST_CASE("start pair has the root as lowest common ancestor") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenResult r = generate_halin({4, 150, seed});
        VerifyResult vr = verify_structure(r.graph, r.annotation);
        REQUIRE(vr.ok());
        Vertex root = select_root(*vr.structure);
        // Lowest-id internal vertex, by definition.
        for (Vertex v = 0; v < root; ++v) CHECK(vr.structure->is_leaf[v]);

        auto [v, w] = select_start_pair(*vr.structure, root);
        OrderedHalin o = ordered(*vr.structure);
        CHECK(o.start_leaf == v);
        CHECK(o.end_leaf == w);
        CHECK(lca(o, v, w) == root);
        // v sits under the root's first child in input order.
        Vertex first_child = vr.structure->tree_adj[root][0];
        Vertex x = v;
        while (x != -1 && x != first_child) x = o.parent[x];
        CHECK(x == first_child);
    }
}

TEST_CASE("DFS in rebuilt child order meets leaves in x order") {
    for (std::uint64_t seed = 40; seed < 52; ++seed) {
        GenResult r = generate_halin({4, 400, seed});
        VerifyResult vr = verify_structure(r.graph, r.annotation);
        REQUIRE(vr.ok());
        OrderedHalin o = ordered(*vr.structure);
        CHECK(dfs_leaf_order(o) == o.leaf_by_x);

        // Leaf x-values are a permutation of 0..L-1; internal x is the
        // subtree minimum.
        for (Vertex y = 0; y < r.graph.n(); ++y) CHECK(o.x[y] == o.a[y]);
        CHECK(o.climb_steps <= 2 * static_cast<std::uint64_t>(r.graph.n()));

        for (Vertex y = 0; y < r.graph.n(); ++y) {
            if (vr.structure->is_leaf[y]) continue;
            CHECK(o.subtree_first_leaf(o.child_at(y, 1)) == o.subtree_first_leaf(y));
            CHECK(o.subtree_last_leaf(o.last_child(y)) == o.subtree_last_leaf(y));
        }
    }
}

TEST_CASE("compute_order reports the unrealizable subtree") {
    Instance bad = testsupport::scrambled_cycle(false);
    // Assemble the structure by hand; verify_structure would already bounce
    // it at the realizability stage.
    HalinStructure s;
    s.g = &bad.graph;
    const Vertex n = bad.graph.n();
    s.is_tree_edge.assign(bad.graph.edges().size(), 0);
    for (std::size_t i = 0; i < bad.graph.edges().size(); ++i) {
        Edge e = normalized(bad.graph.edges()[i]);
        s.is_tree_edge[i] = std::binary_search(bad.annotation.tree_edges.begin(),
                                               bad.annotation.tree_edges.end(), e);
    }
    s.tree_adj.assign(n, {});
    std::vector<int> deg(n, 0);
    for (std::size_t i = 0; i < bad.graph.edges().size(); ++i) {
        if (!s.is_tree_edge[i]) continue;
        auto [u, v] = bad.graph.edges()[i];
        s.tree_adj[u].push_back(v);
        s.tree_adj[v].push_back(u);
    }
    s.is_leaf.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) s.is_leaf[v] = s.tree_adj[v].size() == 1;
    s.cycle_order = {4, 6, 5, 7, 3};
    s.cycle_pos.assign(n, -1);
    for (std::size_t i = 0; i < s.cycle_order.size(); ++i)
        s.cycle_pos[s.cycle_order[i]] = static_cast<std::int32_t>(i);

    OrderResult r = compute_order(s, 0);
    REQUIRE_FALSE(r.ok());
    CHECK_FALSE(r.detail.empty());
    CHECK((r.witness == 1 || r.witness == 2 || r.witness == 0));
}
