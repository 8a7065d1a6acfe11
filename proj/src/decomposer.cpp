#include "decomposer.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#ifndef NDEBUG
#include <set>
#include <tuple>
#endif

#include "recognizer.hpp"

namespace halin {

bool well_defined(const OrderedHalin& o, const AlmostHalinRef& ref) {
    if (ref.kind != 1 && ref.kind != 2) return false;
    if (ref.v < 0 || ref.v >= o.s->g->n() || o.s->is_leaf[ref.v]) return false;
    if (ref.i < 1 || ref.i > ref.j || ref.j > o.children_count(ref.v)) return false;
    if (ref.kind == 1 && ref.v == o.root && ref.i == 1 && ref.j == o.children_count(o.root))
        return false;  // that subgraph is the whole graph
    return true;
}

Vertex omega(const OrderedHalin& o, int kind, Vertex v, int j) {
    Vertex last = o.subtree_last_leaf(o.child_at(v, j));
    return kind == 2 ? last : o.cycle_successor(last);
}

namespace {

// Bags here have at most four vertices; kept inline and sorted.
struct SmallBag {
    Vertex v[4];
    int len = 0;

    void add(Vertex x) {
        int p = len++;
        while (p > 0 && v[p - 1] > x) {
            v[p] = v[p - 1];
            --p;
        }
        v[p] = x;
        if (p > 0 && v[p - 1] == x) {  // drop duplicate
            for (int q = p; q + 1 < len; ++q) v[q] = v[q + 1];
            --len;
        }
    }

    bool operator==(const SmallBag& other) const {
        return len == other.len && std::equal(v, v + len, other.v);
    }
};

SmallBag make_bag(std::initializer_list<Vertex> xs) {
    SmallBag b;
    for (Vertex x : xs) b.add(x);
    return b;
}

}  // namespace

std::vector<Vertex> representatives(const OrderedHalin& o, const AlmostHalinRef& ref) {
    if (!well_defined(o, ref)) throw std::invalid_argument("degenerate Almost Halin reference");
    SmallBag b = make_bag({ref.v, o.subtree_first_leaf(o.child_at(ref.v, ref.i)),
                           omega(o, ref.kind, ref.v, ref.j)});
    return {b.v, b.v + b.len};
}

TreeDecomposition tree_decomp_ah(const OrderedHalin& o, const AlmostHalinRef& top,
                                 DecompStats* stats) {
    if (!well_defined(o, top)) throw std::invalid_argument("degenerate Almost Halin reference");
    if (stats) {
        stats->root_calls.assign(static_cast<std::size_t>(o.s->g->n()), 0);
        stats->total_calls = 0;
    }

    TreeDecomposition td;
    struct Frame {
        std::int8_t kind;
        Vertex v;
        std::int32_t i, j;
        std::int32_t attach;  // node to hang this call's first node under, -1 for the top
#ifndef NDEBUG
        SmallBag expected;
#endif
    };
    std::vector<Frame> work;
#ifndef NDEBUG
    std::set<std::tuple<int, Vertex, int, int>> visited;
#endif

    auto add_node = [&](const SmallBag& bag, std::int32_t parent) {
        std::int32_t id = td.add_bag({bag.v, bag.v + static_cast<std::size_t>(bag.len)});
        if (parent >= 0) td.edges.emplace_back(parent, id);
        return id;
    };

    work.push_back({static_cast<std::int8_t>(top.kind), top.v, top.i, top.j, -1
#ifndef NDEBUG
                    ,
                    SmallBag{}
#endif
    });

    while (!work.empty()) {
        Frame f = work.back();
        work.pop_back();
        if (stats) {
            ++stats->root_calls[f.v];
            ++stats->total_calls;
        }
#ifndef NDEBUG
        assert(visited.emplace(f.kind, f.v, f.i, f.j).second && "recursion revisited a ref");
#endif
        Vertex c = o.child_at(f.v, f.i);
        Vertex first = o.subtree_first_leaf(c);
        Vertex om = omega(o, f.kind, f.v, f.j);
        SmallBag r_bag = make_bag({f.v, first, om});
#ifndef NDEBUG
        assert(f.attach < 0 || r_bag == f.expected);
#endif
        std::int32_t r_node = add_node(r_bag, f.attach);

        if (f.i == f.j) {
            if (o.height[c] == 0) continue;
            SmallBag s_bag = make_bag({f.v, first, om, c});
            std::int32_t s_node = add_node(s_bag, r_node);
            // The child call's first node takes the place of this call's A.
            work.push_back({f.kind, c, 1, static_cast<std::int32_t>(o.children_count(c)), s_node
#ifndef NDEBUG
                            ,
                            make_bag({first, om, c})
#endif
            });
        } else {
            Vertex x = o.subtree_first_leaf(o.child_at(f.v, f.i + 1));
            SmallBag s_bag = make_bag({f.v, first, x, om});
            std::int32_t s_node = add_node(s_bag, r_node);
            // B is handled after A: push it first.
            work.push_back({f.kind, f.v, f.i + 1, f.j, s_node
#ifndef NDEBUG
                            ,
                            make_bag({f.v, x, om})
#endif
            });
            work.push_back({1, f.v, f.i, f.i, s_node
#ifndef NDEBUG
                            ,
                            make_bag({f.v, first, x})
#endif
            });
        }
    }

    td.root = 0;
    return td;
}

std::variant<TreeDecomposition, HtdError> h_td(const Graph& g,
                                               const std::optional<HalinAnnotation>& annotation,
                                               DecompStats* stats) {
    std::optional<HalinStructure> structure;
    if (annotation) {
        VerifyResult vr = verify_structure(g, *annotation);
        if (!vr.ok())
            return HtdError{false, std::string(to_string(*vr.error)) + ": " + vr.detail};
        structure = std::move(vr.structure);
    } else {
        structure = recognize(g);
        if (!structure) return HtdError{true, "input graph is not a Halin graph"};
    }

    Vertex root = select_root(*structure);
    OrderResult order = compute_order(*structure, root);
    assert(order.ok());  // certified structures always order
    const OrderedHalin& o = *order.order;

    AlmostHalinRef top{2, root, 1, o.children_count(root)};
    return tree_decomp_ah(o, top, stats);
}

}  // namespace halin
