#pragma once

#include <random>
#include <vector>

#include "powdom/graph.hpp"

namespace powdom {

/// All simple graphs on exactly n vertices up to isomorphism (n <= 10),
/// built by vertex augmentation with canonical-form deduplication.
/// Deterministic output order.
std::vector<Graph> all_graphs_up_to_iso(int n);

/// Connected members of all_graphs_up_to_iso(n).
std::vector<Graph> connected_graphs_up_to_iso(int n);

/// Canonical adjacency key (maximal adjacency string over all vertex
/// orderings); equal keys iff isomorphic. n <= 10.
uint64_t canonical_key(const Graph& g);

/// Connected by construction: a random spanning tree plus each remaining
/// pair independently with probability extra_edge_prob.
Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_edge_prob);

/// Erdos-Renyi G(n, p); connectivity not guaranteed.
Graph random_graph(std::mt19937_64& rng, int n, double p);

/// Random connected split graph: clique of random size c in [1, n-1], every
/// independent vertex attached to a non-empty random subset of the clique.
Graph random_connected_split_graph(std::mt19937_64& rng, int n);

}  // namespace powdom
