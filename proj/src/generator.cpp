#include "generator.hpp"

#include <numeric>
#include <stdexcept>

#include "rng.hpp"

namespace halin {

namespace {

struct RawInstance {
    Vertex n = 0;
    std::vector<Edge> tree_edges;
    std::vector<Edge> cycle_edges;
    std::uint64_t sampled_n = 0;
    std::uint64_t pendants = 0;
    bool ok = false;
};

RawInstance build_unlabeled(const GenParams& params, Rng& rng) {
    RawInstance out;
    const std::uint64_t span = params.n_max - params.n_min + 1;
    const auto N = static_cast<Vertex>(params.n_min + rng.below(span));
    out.sampled_n = static_cast<std::uint64_t>(N);

    out.tree_edges.reserve(static_cast<std::size_t>(N) + N / 2);
    for (Vertex i = 1; i < N; ++i)
        out.tree_edges.emplace_back(i, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(i))));

    // Pendant fix: degrees are taken once, before any pendant is added.
    std::vector<std::int32_t> deg(static_cast<std::size_t>(N), 0);
    for (Edge e : out.tree_edges) {
        ++deg[e.first];
        ++deg[e.second];
    }
    Vertex next_id = N;
    for (Vertex v = 0; v < N; ++v)
        if (deg[v] == 2) out.tree_edges.emplace_back(v, next_id++);
    out.n = next_id;
    out.pendants = static_cast<std::uint64_t>(next_id - N);

    // Adjacency in edge-insertion order; the DFS below follows it.
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(out.n));
    for (Edge e : out.tree_edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }

    std::vector<Vertex> leaves;
    {
        std::vector<std::uint32_t> next_child(static_cast<std::size_t>(out.n), 0);
        std::vector<Vertex> parent(static_cast<std::size_t>(out.n), -1);
        std::vector<Vertex> stack{0};
        parent[0] = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            // First entry only: a degree-1 root stays stacked until the end.
            if (adj[v].size() == 1 && next_child[v] == 0) leaves.push_back(v);
            for (;;) {
                if (next_child[v] == adj[v].size()) {
                    stack.pop_back();
                    break;
                }
                Vertex w = adj[v][next_child[v]++];
                if (parent[w] != -1) continue;
                parent[w] = v;
                stack.push_back(w);
                break;
            }
        }
    }
    if (leaves.size() < 3) return out;  // caller retries with the next seed

    out.cycle_edges.reserve(leaves.size());
    for (std::size_t k = 0; k + 1 < leaves.size(); ++k)
        out.cycle_edges.emplace_back(leaves[k], leaves[k + 1]);
    out.cycle_edges.emplace_back(leaves.back(), leaves.front());
    out.ok = true;
    return out;
}

}  // namespace

GenResult generate_halin(const GenParams& params) {
    if (params.n_min < 4)
        throw std::invalid_argument("n_min must be at least 4");
    if (params.n_min > params.n_max)
        throw std::invalid_argument("n_min must not exceed n_max");

    std::uint64_t seed = params.seed;
    for (;;) {
        Rng rng(seed);
        RawInstance raw = build_unlabeled(params, rng);
        if (!raw.ok) {
            // Unreachable for N >= 4 after the pendant fix, but guarded: a
            // cycle needs at least three leaves.
            ++seed;
            continue;
        }

        std::vector<Vertex> perm(static_cast<std::size_t>(raw.n));
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);

        auto relabel = [&](std::vector<Edge>& es) {
            for (Edge& e : es) e = {perm[e.first], perm[e.second]};
        };
        relabel(raw.tree_edges);
        relabel(raw.cycle_edges);

        std::vector<Edge> all;
        all.reserve(raw.tree_edges.size() + raw.cycle_edges.size());
        all.insert(all.end(), raw.tree_edges.begin(), raw.tree_edges.end());
        all.insert(all.end(), raw.cycle_edges.begin(), raw.cycle_edges.end());

        GenResult result;
        result.graph = Graph::build(raw.n, all);
        result.annotation.root = perm[0];
        result.annotation.seed = seed;
        result.annotation.tree_edges = std::move(raw.tree_edges);
        result.annotation.cycle_edges = std::move(raw.cycle_edges);
        result.annotation.normalize();
        result.sampled_n = raw.sampled_n;
        result.pendants_added = raw.pendants;
        result.effective_seed = seed;
        return result;
    }
}

}  // namespace halin
