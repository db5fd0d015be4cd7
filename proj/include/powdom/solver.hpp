#pragma once

#include <cstdint>
#include <vector>

#include "powdom/graph.hpp"
#include "powdom/structure.hpp"

namespace powdom {

struct SolveOptions {
    int max_n = 24;              ///< exact-solve limit; raiseable up to kMaxVertices
    int threads = 1;
    bool use_twin_pruning = true;
    bool enumerate_all = false;  ///< collect every gamma_p-set (subject to all_cap)
    size_t all_cap = 1u << 20;
    bool per_component = false;  ///< allow disconnected input (sum / max semantics)
};

struct SolveStats {
    uint64_t nodes_explored = 0;  ///< candidate sets actually propagated
    uint64_t twin_prunes = 0;     ///< candidates discarded by the twin filter
    double wall_ms = 0.0;
};

/// Exact solve output. rad_p minimizes over minimum-cardinality PDSs; the
/// literal minimum over all PDSs is also reported (V itself is a PDS with
/// radius 1, so that figure is 1 for every non-empty graph).
struct SolveResult {
    int gamma_p = 0;
    int rad_p = 0;
    VertexSet witness;                  ///< lex-least optimal PDS
    std::vector<VertexSet> all_min_pds; ///< filled when enumerate_all
    bool all_min_pds_truncated = false;
    int rad_p_any_pds = 0;
    SolveStats stats;
};

/// Exhaustive cardinality-increasing search, lexicographic within each
/// cardinality. Deterministic output regardless of thread count.
/// Throws size_limit_error over max_n and invalid_argument for disconnected
/// input unless per_component is set.
SolveResult solve(const Graph& g, const SolveOptions& options = {});

/// Same contract as solve() but the search ranges only over subsets of N(I);
/// on split graphs this is guaranteed to find an optimal PDS.
SolveResult split_restricted_solve(const Graph& g, const SplitPartition& part,
                                   const SolveOptions& options = {});

/// Twin-pair filter: false means the candidate at its final cardinality
/// cannot be a PDS because some twin pair is untouched by N[candidate].
bool passes_twin_filter(const Graph& g, const std::vector<std::pair<int, int>>& twin_pairs,
                        const VertexSet& candidate);

}  // namespace powdom
