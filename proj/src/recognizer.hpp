#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "halin_structure.hpp"

namespace halin {

enum class VerifyError {
    TOO_SMALL,
    EDGE_PARTITION_MISMATCH,
    NOT_SPANNING_TREE,
    DEGREE_TWO_INTERNAL,
    CYCLE_NOT_ON_LEAVES,
    CYCLE_NOT_SIMPLE,
    ORDER_NOT_REALIZABLE,
};

const char* to_string(VerifyError e);

struct VerifyResult {
    std::optional<HalinStructure> structure;
    std::optional<VerifyError> error;
    std::string detail;
    bool ok() const { return structure.has_value(); }
};

/// Certifies a claimed skeleton/cycle partition against its graph, checking
/// in order: size, edge-partition coverage, spanning-tree shape, internal
/// degrees, cycle shape, and cycle-order realizability. The first violated
/// clause is reported with a witness. The graph must outlive the returned
/// structure.
VerifyResult verify_structure(const Graph& g, const HalinAnnotation& a);

struct RecognizeStats {
    std::uint64_t faces = 0;       // faces enumerated from the embedding
    std::uint64_t candidates = 0;  // cycle candidates handed to verify_structure
};

/// Recognizes a Halin graph by exact search and returns some valid structure
/// (decompositions need not be unique), or nothing.
///
/// The cycle length is forced to m-n+1 (the skeleton keeps n-1 edges) and
/// every cycle vertex has degree exactly three (one skeleton edge plus two
/// cycle edges). A Halin graph is planar and 3-connected, so its leaf cycle
/// is a face of the one planar embedding: the search embeds the graph
/// (Boyer-Myrvold), walks each face once, keeps the simple faces of the
/// forced length whose vertices all have degree three, and calls
/// verify_structure on each candidate in face-traversal order until one is
/// certified. Non-planar or degree-deficient inputs are rejected up front.
std::optional<HalinStructure> recognize(const Graph& g, RecognizeStats* stats = nullptr);

}  // namespace halin
