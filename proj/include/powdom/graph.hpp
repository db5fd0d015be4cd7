#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powdom/vertex_set.hpp"

namespace powdom {

using Edge = std::pair<int, int>;

/// Thrown when an input exceeds the configured size limit.
class size_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph with bitset adjacency rows.
/// Invariants: no loops, symmetric adjacency, every bit < order().
class Graph {
public:
    Graph() = default;

    /// Builds the graph on vertices 0..n-1 with the given edges. Duplicate
    /// edges collapse; loops and out-of-range endpoints throw.
    Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});
    Graph(int n, std::initializer_list<Edge> edges, std::vector<std::string> labels = {})
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels)) {}

    int order() const { return n_; }
    int edge_count() const;

    const VertexSet& neighbors(int v) const { return adj_[check(v)]; }
    bool adjacent(int u, int v) const { return adj_[check(u)].contains(check(v)); }
    int degree(int v) const { return adj_[check(v)].count(); }

    int min_degree() const;
    int max_degree() const;

    VertexSet vertices() const { return VertexSet::full(n_); }

    /// N[v]
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[check(v)];
        s.insert(v);
        return s;
    }

    /// N[S] = S together with every neighbor of S.
    VertexSet closed_neighborhood(const VertexSet& s) const {
        VertexSet out = s;
        for (int v : s) out |= adj_[v];
        return out;
    }

    /// N(S) = union of open neighborhoods (may intersect S).
    VertexSet open_neighborhood(const VertexSet& s) const {
        VertexSet out;
        for (int v : s) out |= adj_[v];
        return out;
    }

    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;

private:
    int check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
        return v;
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

bool is_connected(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Subgraph induced by `keep`; vertices are relabeled densely in increasing
/// order. Second return value maps new index -> old index.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep);

/// K_n minus the given edge set: uv is an edge iff u != v and uv is not forbidden.
Graph complement_within(int n, std::span<const Edge> forbidden);

/// Join G + H: disjoint union plus all edges between the two vertex sets.
/// H's vertices are shifted by G's order.
Graph join(const Graph& g, const Graph& h);

}  // namespace powdom
