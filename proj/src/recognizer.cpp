#include "recognizer.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>

#include "ordering.hpp"

namespace halin {

namespace {

std::uint64_t edge_key(Edge e) {
    e = normalized(e);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.first)) << 32) |
           static_cast<std::uint32_t>(e.second);
}

std::string edge_text(Edge e) {
    return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

VerifyResult reject(VerifyError err, std::string detail) {
    VerifyResult r;
    r.error = err;
    r.detail = std::move(detail);
    return r;
}

// Union-find without path halving state that matters; plain and small.
class Dsu {
public:
    explicit Dsu(std::int32_t n) : parent_(static_cast<std::size_t>(n)) {
        for (std::int32_t i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }
    std::int32_t find(std::int32_t v) {
        while (parent_[static_cast<std::size_t>(v)] != v) {
            parent_[static_cast<std::size_t>(v)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
            v = parent_[static_cast<std::size_t>(v)];
        }
        return v;
    }
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[static_cast<std::size_t>(a)] = b;
        return true;
    }

private:
    std::vector<std::int32_t> parent_;
};

}  // namespace

const char* to_string(VerifyError e) {
    switch (e) {
        case VerifyError::TOO_SMALL: return "TOO_SMALL";
        case VerifyError::EDGE_PARTITION_MISMATCH: return "EDGE_PARTITION_MISMATCH";
        case VerifyError::NOT_SPANNING_TREE: return "NOT_SPANNING_TREE";
        case VerifyError::DEGREE_TWO_INTERNAL: return "DEGREE_TWO_INTERNAL";
        case VerifyError::CYCLE_NOT_ON_LEAVES: return "CYCLE_NOT_ON_LEAVES";
        case VerifyError::CYCLE_NOT_SIMPLE: return "CYCLE_NOT_SIMPLE";
        case VerifyError::ORDER_NOT_REALIZABLE: return "ORDER_NOT_REALIZABLE";
    }
    return "?";
}

VerifyResult verify_structure(const Graph& g, const HalinAnnotation& a) {
    const Vertex n = g.n();
    if (n < 4) return reject(VerifyError::TOO_SMALL, "|V| = " + std::to_string(n) + " < 4");

    // Partition must cover the edge set exactly, each edge once.
    std::unordered_map<std::uint64_t, std::int32_t> edge_id;
    edge_id.reserve(g.edges().size() * 2);
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        edge_id.emplace(edge_key(g.edges()[i]), static_cast<std::int32_t>(i));

    std::vector<std::int8_t> mark(g.edges().size(), 0);  // 1 tree, 2 cycle
    auto place = [&](const std::vector<Edge>& edges, std::int8_t kind) -> std::optional<std::string> {
        for (Edge e : edges) {
            auto it = edge_id.find(edge_key(e));
            if (it == edge_id.end())
                return "annotation edge " + edge_text(e) + " is not a graph edge";
            if (mark[static_cast<std::size_t>(it->second)] != 0)
                return "edge " + edge_text(e) + " listed twice in the annotation";
            mark[static_cast<std::size_t>(it->second)] = kind;
        }
        return std::nullopt;
    };
    if (auto err = place(a.tree_edges, 1))
        return reject(VerifyError::EDGE_PARTITION_MISMATCH, *err);
    if (auto err = place(a.cycle_edges, 2))
        return reject(VerifyError::EDGE_PARTITION_MISMATCH, *err);
    for (std::size_t i = 0; i < mark.size(); ++i)
        if (mark[i] == 0)
            return reject(VerifyError::EDGE_PARTITION_MISMATCH,
                          "graph edge " + edge_text(g.edges()[i]) + " missing from the annotation");

    // Tree edges must form a spanning tree: n-1 edges and no cycle.
    if (static_cast<std::int64_t>(a.tree_edges.size()) != n - 1)
        return reject(VerifyError::NOT_SPANNING_TREE,
                      std::to_string(a.tree_edges.size()) + " tree edges, expected " +
                          std::to_string(n - 1));
    {
        Dsu dsu(n);
        for (Edge e : a.tree_edges)
            if (!dsu.unite(e.first, e.second))
                return reject(VerifyError::NOT_SPANNING_TREE,
                              "tree edges contain a cycle through " + edge_text(e));
    }

    std::vector<std::int32_t> skel_deg(static_cast<std::size_t>(n), 0);
    for (Edge e : a.tree_edges) {
        ++skel_deg[e.first];
        ++skel_deg[e.second];
    }
    for (Vertex v = 0; v < n; ++v)
        if (skel_deg[v] == 2)
            return reject(VerifyError::DEGREE_TWO_INTERNAL,
                          "skeleton vertex " + std::to_string(v) + " has degree two");

    // Cycle edges must form one simple cycle over exactly the skeleton leaves.
    std::vector<std::int32_t> cyc_deg(static_cast<std::size_t>(n), 0);
    for (Edge e : a.cycle_edges) {
        for (Vertex v : {e.first, e.second}) {
            if (skel_deg[v] != 1)
                return reject(VerifyError::CYCLE_NOT_ON_LEAVES,
                              "cycle edge endpoint " + std::to_string(v) +
                                  " is not a skeleton leaf");
            ++cyc_deg[v];
        }
    }
    std::vector<std::vector<Vertex>> cyc_adj(static_cast<std::size_t>(n));
    for (Edge e : a.cycle_edges) {
        cyc_adj[e.first].push_back(e.second);
        cyc_adj[e.second].push_back(e.first);
    }
    Vertex start = -1;
    std::int64_t leaf_total = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (skel_deg[v] == 1) {
            ++leaf_total;
            if (cyc_deg[v] == 0)
                return reject(VerifyError::CYCLE_NOT_ON_LEAVES,
                              "leaf " + std::to_string(v) + " is not on the cycle");
            if (cyc_deg[v] != 2)
                return reject(VerifyError::CYCLE_NOT_SIMPLE,
                              "vertex " + std::to_string(v) + " has " +
                                  std::to_string(cyc_deg[v]) + " cycle edges");
            if (start == -1) start = v;
        }
    }
    if (static_cast<std::int64_t>(a.cycle_edges.size()) != leaf_total)
        return reject(VerifyError::CYCLE_NOT_SIMPLE,
                      std::to_string(a.cycle_edges.size()) + " cycle edges over " +
                          std::to_string(leaf_total) + " leaves");

    HalinStructure s;
    s.g = &g;
    s.is_leaf.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) s.is_leaf[v] = (skel_deg[v] == 1);
    s.cycle_pos.assign(static_cast<std::size_t>(n), -1);
    s.cycle_order.reserve(static_cast<std::size_t>(leaf_total));
    {
        // Deterministic walk: lowest-id leaf first, toward its lower neighbor.
        Vertex prev = start;
        Vertex cur = std::min(cyc_adj[start][0], cyc_adj[start][1]);
        s.cycle_order.push_back(start);
        s.cycle_pos[start] = 0;
        while (cur != start) {
            if (s.cycle_pos[cur] != -1)
                return reject(VerifyError::CYCLE_NOT_SIMPLE, "cycle edges form multiple cycles");
            s.cycle_pos[cur] = static_cast<std::int32_t>(s.cycle_order.size());
            s.cycle_order.push_back(cur);
            Vertex nxt = cyc_adj[cur][0] == prev ? cyc_adj[cur][1] : cyc_adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        if (static_cast<std::int64_t>(s.cycle_order.size()) != leaf_total)
            return reject(VerifyError::CYCLE_NOT_SIMPLE, "cycle edges form multiple cycles");
    }

    s.is_tree_edge.assign(g.edges().size(), 0);
    for (std::size_t i = 0; i < mark.size(); ++i) s.is_tree_edge[i] = (mark[i] == 1);
    s.tree_adj.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (!s.is_tree_edge[i]) continue;
        auto [u, v] = g.edges()[i];
        s.tree_adj[u].push_back(v);
        s.tree_adj[v].push_back(u);
    }

    // Realizability: the rooted ordering must give contiguous subtree arcs.
    Vertex root = select_root(s);
    assert(root != -1);
    OrderResult order = compute_order(s, root);
    if (!order.ok()) return reject(VerifyError::ORDER_NOT_REALIZABLE, order.detail);

    VerifyResult r;
    r.structure = std::move(s);
    return r;
}

namespace {

using EmbeddingGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, std::int32_t>>;

struct FaceCollector : boost::planar_face_traversal_visitor {
    std::vector<std::vector<Vertex>>* faces;
    std::vector<Vertex> current;

    void begin_face() { current.clear(); }
    template <typename V>
    void next_vertex(V v) {
        current.push_back(static_cast<Vertex>(v));
    }
    void end_face() { faces->push_back(current); }
};

}  // namespace

std::optional<HalinStructure> recognize(const Graph& g, RecognizeStats* stats) {
    RecognizeStats local;
    RecognizeStats& st = stats ? *stats : local;
    const Vertex n = g.n();
    if (n < 4 || !g.connected()) return std::nullopt;
    const std::int64_t cycle_len = g.m() - n + 1;
    if (cycle_len < 3) return std::nullopt;

    std::int64_t deg3_count = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) < 3) return std::nullopt;  // every Halin vertex has degree >= 3
        if (g.degree(v) == 3) ++deg3_count;
    }
    if (deg3_count < cycle_len) return std::nullopt;
    if (g.m() > 3 * static_cast<std::int64_t>(n) - 6) return std::nullopt;  // not planar

    EmbeddingGraph bg(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        boost::add_edge(static_cast<std::size_t>(g.edges()[i].first),
                        static_cast<std::size_t>(g.edges()[i].second),
                        static_cast<std::int32_t>(i), bg);

    using EdgeDesc = boost::graph_traits<EmbeddingGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding(static_cast<std::size_t>(n));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(),
                                              boost::get(boost::vertex_index, bg)));
    if (!planar) return std::nullopt;

    std::vector<std::vector<Vertex>> faces;
    FaceCollector collector;
    collector.faces = &faces;
    boost::planar_face_traversal(
        bg,
        boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
        collector, boost::get(boost::edge_index, bg));

    // A Halin graph is 3-connected, so its embedding is the unique one and
    // the leaf cycle shows up as a face. Vet the plausible faces.
    std::vector<std::int32_t> stamp(static_cast<std::size_t>(n), -1);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        ++st.faces;
        const auto& face = faces[f];
        if (static_cast<std::int64_t>(face.size()) != cycle_len) continue;
        bool plausible = true;
        for (Vertex v : face) {
            if (g.degree(v) != 3 || stamp[v] == static_cast<std::int32_t>(f)) {
                plausible = false;  // wrong degree or a repeated face vertex
                break;
            }
            stamp[v] = static_cast<std::int32_t>(f);
        }
        if (!plausible) continue;

        ++st.candidates;
        HalinAnnotation cand;
        cand.root = 0;
        std::unordered_map<std::uint64_t, char> cyc;
        cyc.reserve(face.size() * 2);
        for (std::size_t i = 0; i < face.size(); ++i)
            cyc.emplace(edge_key({face[i], face[(i + 1) % face.size()]}), 1);
        for (Edge e : g.edges())
            (cyc.count(edge_key(e)) ? cand.cycle_edges : cand.tree_edges).push_back(e);
        if (cand.cycle_edges.size() != face.size()) continue;  // repeated face edge
        VerifyResult vr = verify_structure(g, cand);
        if (vr.ok()) return std::move(vr.structure);
    }
    return std::nullopt;
}

}  // namespace halin
