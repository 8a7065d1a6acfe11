#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "tree_decomposition.hpp"

namespace halin {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Skeleton/cycle edge partition of a Halin graph, carried between pipeline
/// stages as a `.halin` sidecar. Edges are 0-based in memory, normalized and
/// sorted; files use 1-based ids.
struct HalinAnnotation {
    Vertex root = 0;
    std::optional<std::uint64_t> seed;
    std::vector<Edge> tree_edges;
    std::vector<Edge> cycle_edges;

    /// Normalizes and sorts both edge lists (canonical form; parse and the
    /// generator both produce it, so round-trips compare with ==).
    void normalize();

    bool operator==(const HalinAnnotation&) const = default;
};

// PACE 2017 graph format:
//   c <comment>           (anywhere, discarded)
//   p tw <n> <m>          (exactly once, before edges)
//   <u> <v>               (m lines, 1-based)
Graph parse_gr(std::string_view text);

/// Canonical form: header, then edges with u < v sorted lexicographically,
/// single spaces, one trailing newline, no comments.
std::string write_gr(const Graph& g);

// PACE 2017 tree decomposition format:
//   c <comment>
//   s td <#bags> <max_bag_size> <n>
//   b <id> <v...>          (#bags lines, ids 1..#bags in any order)
//   <id> <id>              (#bags-1 node edge lines)
// Whether the node edges form a tree is the validator's call, not a parse
// error.
TreeDecomposition parse_td(std::string_view text);
std::string write_td(const TreeDecomposition& td, Vertex n);

// Sidecar format (1-based ids):
//   root <r>
//   seed <s>               (optional)
//   t <u> <v>              (skeleton edges)
//   y <u> <v>              (leaf-cycle edges)
HalinAnnotation parse_annotation(std::string_view text);
std::string write_annotation(const HalinAnnotation& a);

// File helpers; throw ParseError on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

}  // namespace halin
