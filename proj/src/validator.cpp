#include "validator.hpp"

#include <algorithm>
#include <vector>

namespace halin {

namespace {

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

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
    ValidationReport rep;
    const Vertex n = g.n();
    const std::int32_t nodes = td.node_count();
    rep.width = td.width();

    if (nodes == 0) {
        rep.shape_ok = false;
        rep.shape_detail = "no bags";
    }
    for (auto [s, t] : td.edges) {
        if (s < 0 || s >= nodes || t < 0 || t >= nodes) {
            rep.shape_ok = false;
            rep.shape_detail = "node edge endpoint out of range";
        } else if (s == t && rep.shape_ok) {
            rep.shape_ok = false;
            rep.shape_detail = "self-loop between bags " + std::to_string(s + 1);
        }
    }
    bool ids_in_range = true;
    for (Vertex v : td.bag_values)
        if (v < 0 || v >= n) ids_in_range = false;
    if (!ids_in_range) {
        rep.shape_ok = false;
        rep.shape_detail = "bag contains a vertex outside the graph";
    }
    if (rep.shape_ok && nodes > 0) {
        if (static_cast<std::int32_t>(td.edges.size()) != nodes - 1) {
            rep.shape_ok = false;
            rep.shape_detail = std::to_string(td.edges.size()) + " node edges for " +
                               std::to_string(nodes) + " bags";
        } else {
            Dsu dsu(nodes);
            for (auto [s, t] : td.edges) {
                if (!dsu.unite(s, t)) {
                    rep.shape_ok = false;
                    rep.shape_detail = "node edges contain a cycle";
                    break;
                }
            }
        }
    }

    // Occurrence counts per vertex (C1 and half of C3).
    std::vector<std::int32_t> occurrences(static_cast<std::size_t>(n), 0);
    if (ids_in_range)
        for (Vertex v : td.bag_values) ++occurrences[v];
    for (Vertex v = 0; v < n; ++v) {
        if (occurrences[v] == 0) {
            rep.c1.ok = false;
            rep.c1.witness_vertex = v;
            break;
        }
    }

    // Node edges whose both bags contain the vertex (C3 counting rule).
    std::vector<std::int32_t> covered_links(static_cast<std::size_t>(n), 0);
    if (ids_in_range) {
        for (auto [s, t] : td.edges) {
            if (s < 0 || s >= nodes || t < 0 || t >= nodes) continue;
            auto bs = td.bag(s);
            auto bt = td.bag(t);
            std::size_t i = 0, j = 0;
            while (i < bs.size() && j < bt.size()) {
                if (bs[i] < bt[j]) ++i;
                else if (bs[i] > bt[j]) ++j;
                else {
                    ++covered_links[bs[i]];
                    ++i;
                    ++j;
                }
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (occurrences[v] > 0 && covered_links[v] != occurrences[v] - 1) {
                rep.c3.ok = false;
                rep.c3.witness_vertex = v;
                break;
            }
        }
    }

    // C2: scan the endpoint with fewer occurrences; bags are sorted.
    if (ids_in_range) {
        std::vector<std::int32_t> occ_off(static_cast<std::size_t>(n) + 1, 0);
        for (Vertex v : td.bag_values) ++occ_off[static_cast<std::size_t>(v) + 1];
        for (Vertex v = 0; v < n; ++v) occ_off[static_cast<std::size_t>(v) + 1] += occ_off[v];
        std::vector<std::int32_t> occ_nodes(td.bag_values.size());
        {
            std::vector<std::int32_t> cursor(occ_off.begin(), occ_off.end() - 1);
            for (std::int32_t t = 0; t < nodes; ++t)
                for (Vertex v : td.bag(t))
                    occ_nodes[static_cast<std::size_t>(cursor[v]++)] = t;
        }
        auto bag_contains = [&](std::int32_t t, Vertex v) {
            auto bag = td.bag(t);
            return std::binary_search(bag.begin(), bag.end(), v);
        };
        for (Edge e : g.edges()) {
            Vertex u = e.first, v = e.second;
            if (occurrences[u] > occurrences[v]) std::swap(u, v);
            bool covered = false;
            for (std::int32_t k = occ_off[u]; k < occ_off[static_cast<std::size_t>(u) + 1]; ++k) {
                if (bag_contains(occ_nodes[static_cast<std::size_t>(k)], v)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                rep.c2.ok = false;
                rep.c2.witness_edge = e;
                break;
            }
        }
    } else {
        rep.c2.ok = false;
    }

    return rep;
}

std::string ValidationReport::format() const {
    std::string out;
    auto line = [&](const std::string& name, bool ok, const std::string& extra) {
        out += name + ": " + (ok ? "ok" : "FAIL") + extra + "\n";
    };
    line("tree shape", shape_ok, shape_ok || shape_detail.empty() ? "" : " (" + shape_detail + ")");
    line("C1 vertex coverage", c1.ok,
         c1.ok ? "" : " (vertex " + std::to_string(c1.witness_vertex + 1) + " uncovered)");
    line("C2 edge coverage", c2.ok,
         c2.ok || c2.witness_edge.first < 0
             ? ""
             : " (edge " + std::to_string(c2.witness_edge.first + 1) + " " +
                   std::to_string(c2.witness_edge.second + 1) + " uncovered)");
    line("C3 connectivity", c3.ok,
         c3.ok ? "" : " (vertex " + std::to_string(c3.witness_vertex + 1) +
                          " occurs in a disconnected node set)");
    out += "width: " + std::to_string(width) + "\n";
    out += accepted() ? "verdict: accept\n" : "verdict: reject\n";
    return out;
}

}  // namespace halin
