#include "powdom/structure.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace powdom {

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.order();
    if (n == 0) return std::nullopt;

    // Hammer-Simeone: with degrees d_1 >= ... >= d_n and
    // m = max{i : d_i >= i-1}, G is split iff
    // sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the m vertices of
    // largest degree form a maximum clique while the rest are independent.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) >= i - 1) m = i;

    long top = 0, rest = 0;
    for (int i = 0; i < n; ++i) (i < m ? top : rest) += g.degree(order[i]);
    if (top != static_cast<long>(m) * (m - 1) + rest) return std::nullopt;

    SplitPartition part;
    for (int i = 0; i < m; ++i) part.clique.insert(order[i]);
    part.independent = part.clique.complement_in(n);

    if (part.independent.empty() && n >= 2) {
        // Complete graph: keep both sides non-empty by donating one vertex.
        part.clique.erase(n - 1);
        part.independent.insert(n - 1);
        part.donated = true;
    }

#ifndef NDEBUG
    for (int u : part.clique)
        for (int v : part.clique)
            if (u < v) assert(g.adjacent(u, v));
    for (int u : part.independent) assert(!g.neighbors(u).intersects(part.independent));
#endif
    return part;
}

namespace {

// Carraghan-Pardalos style expansion.
void expand_clique(const std::vector<VertexSet>& adj, VertexSet cand, int size, int& best) {
    while (!cand.empty()) {
        if (size + cand.count() <= best) return;
        const int v = cand.first();
        cand.erase(v);
        best = std::max(best, size + 1);
        expand_clique(adj, cand & adj[v], size + 1, best);
    }
}

}  // namespace

int clique_number(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit)
        throw size_limit_error("clique_number limited to n <= " + std::to_string(limit));
    if (n == 0) return 0;
    std::vector<VertexSet> adj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    int best = 0;
    expand_clique(adj, g.vertices(), 0, best);
    return best;
}

std::vector<std::pair<int, int>> twins(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            VertexSet a = g.neighbors(u);
            a.erase(v);
            VertexSet b = g.neighbors(v);
            b.erase(u);
            if (a == b) out.emplace_back(u, v);
        }
    }
    return out;
}

}  // namespace powdom
