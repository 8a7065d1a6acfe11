#pragma once

#include "graph.hpp"
#include "tree_decomposition.hpp"

namespace halin {

struct OracleResult {
    int width = -1;
    TreeDecomposition witness;
};

/// Exact treewidth by search over elimination orderings: for each candidate
/// width k (ascending), a depth-first search eliminates only vertices whose
/// current connected-through-eliminated neighborhood has size at most k,
/// memoizing eliminated subsets that failed. The witness decomposition is
/// rebuilt from the first feasible ordering. Independent of the structural
/// decomposition path; intended as ground truth for tiny graphs.
///
/// Throws std::invalid_argument when n > limit, n == 0, or limit > 30.
OracleResult exact_treewidth(const Graph& g, int limit = 16);

}  // namespace halin
