#include "powdom/graph.hpp"

#include <algorithm>

namespace powdom {

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), adj_(static_cast<size_t>(std::max(n, 0))), labels_(std::move(labels)) {
    if (n < 0 || n > kMaxVertices)
        throw size_limit_error("graph order " + std::to_string(n) + " outside [0, " +
                               std::to_string(kMaxVertices) + "]");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match order");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) d = std::min(d, adj_[v].count());
    return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, adj_[v].count());
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::label(int v) const {
    check(v);
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        frontier = next - seen;
        seen |= frontier;
    }
    return seen == g.vertices();
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        VertexSet seen = VertexSet::single(remaining.first());
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            frontier = next - seen;
            seen |= frontier;
        }
        comps.push_back(seen);
        remaining -= seen;
    }
    return comps;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> to_old = keep.to_vector();
    std::vector<int> to_new(static_cast<size_t>(g.order()), -1);
    for (size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int u : keep)
        for (int v : g.neighbors(u) & keep)
            if (u < v) es.emplace_back(to_new[u], to_new[v]);
    return {Graph(static_cast<int>(to_old.size()), es), std::move(to_old)};
}

Graph complement_within(int n, std::span<const Edge> forbidden) {
    if (n < 0 || n > kMaxVertices) throw size_limit_error("order outside bitset width");
    std::vector<VertexSet> banned(static_cast<size_t>(n));
    for (auto [u, v] : forbidden) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("forbidden edge endpoint out of range");
        if (u == v) continue;  // a loop can never be an edge anyway
        banned[u].insert(v);
        banned[v].insert(u);
    }
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!banned[u].contains(v)) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    if (ng + nh > kMaxVertices) throw size_limit_error("join order exceeds bitset width");
    std::vector<Edge> es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) es.emplace_back(u, ng + v);
    return Graph(ng + nh, es);
}

}  // namespace powdom
