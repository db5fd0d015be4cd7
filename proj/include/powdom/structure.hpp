#pragma once

#include <optional>
#include <vector>

#include "powdom/graph.hpp"

namespace powdom {

/// Split partition V = C ⊔ I with G[C] a maximum clique and I independent.
/// For complete graphs on n >= 2 no such partition has I non-empty, so one
/// clique vertex is donated to I and `donated` is set; |clique| = ω(G) - 1
/// in that case, and |clique| = ω(G) otherwise.
struct SplitPartition {
    VertexSet clique;
    VertexSet independent;
    bool donated = false;
};

/// Recognizes split graphs via the degree-sequence characterization and
/// returns a maximum-clique partition; nullopt if g is not split.
std::optional<SplitPartition> split_partition(const Graph& g);

/// Exact ω(G) by branch and bound over bitset candidate sets.
int clique_number(const Graph& g, int limit = 64);

/// All unordered pairs {u, v}, adjacent or not, with N(u)\{v} = N(v)\{u}.
std::vector<std::pair<int, int>> twins(const Graph& g);

}  // namespace powdom
