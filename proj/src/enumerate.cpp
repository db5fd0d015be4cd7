#include "powdom/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace powdom {

namespace {

constexpr int kEnumLimit = 10;  // 45 triangle bits fit a uint64_t key

// Rows as vertex-adjacency bitmasks, n <= kEnumLimit.
using Rows = std::vector<uint16_t>;

// Depth-first maximization of the adjacency string: position k contributes
// the k bits of the next vertex against the already-placed ones. Only
// candidates achieving the maximal chunk at each depth can reach the
// maximum, so ties are the only branching.
struct CanonSearch {
    const Rows& rows;
    int n;
    uint64_t best = 0;
    std::array<int, kEnumLimit> placed{};

    explicit CanonSearch(const Rows& r) : rows(r), n(static_cast<int>(r.size())) {}

    void run() { dfs(0, 0, 0); }

    void dfs(int depth, uint16_t used, uint64_t prefix) {
        if (depth == n) {
            best = std::max(best, prefix);
            return;
        }
        uint32_t chunk_best = 0;
        std::array<int, kEnumLimit> cands{};
        int ncands = 0;
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            uint32_t chunk = 0;
            for (int i = 0; i < depth; ++i)
                chunk = (chunk << 1) | ((rows[v] >> placed[i]) & 1u);
            if (ncands == 0 || chunk > chunk_best) {
                chunk_best = chunk;
                ncands = 0;
            }
            if (chunk == chunk_best) cands[ncands++] = v;
        }
        const uint64_t next_prefix = (prefix << depth) | chunk_best;
        for (int i = 0; i < ncands; ++i) {
            const int v = cands[i];
            placed[depth] = v;
            dfs(depth + 1, used | (1u << v), next_prefix);
        }
    }
};

uint64_t canon(const Rows& rows) {
    CanonSearch s(rows);
    s.run();
    return s.best;
}

Graph rows_to_graph(const Rows& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rows[u] & (1u << v)) es.emplace_back(u, v);
    return Graph(n, es);
}

}  // namespace

uint64_t canonical_key(const Graph& g) {
    const int n = g.order();
    if (n > kEnumLimit) throw size_limit_error("canonical_key limited to n <= 10");
    Rows rows(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        rows[u] |= static_cast<uint16_t>(1u << v);
        rows[v] |= static_cast<uint16_t>(1u << u);
    }
    return canon(rows);
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > kEnumLimit)
        throw size_limit_error("all_graphs_up_to_iso limited to 1 <= n <= 10");

    std::vector<Rows> level{Rows{0}};
    for (int k = 2; k <= n; ++k) {
        std::vector<Rows> grown;
        std::unordered_set<uint64_t> seen;
        for (const Rows& base : level) {
            for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                Rows rows = base;
                rows.push_back(static_cast<uint16_t>(mask));
                for (int v = 0; v < k - 1; ++v)
                    if (mask & (1u << v)) rows[v] |= static_cast<uint16_t>(1u << (k - 1));
                if (seen.insert(canon(rows)).second) grown.push_back(std::move(rows));
            }
        }
        level = std::move(grown);
    }

    std::vector<Graph> out;
    out.reserve(level.size());
    for (const Rows& rows : level) out.push_back(rows_to_graph(rows));
    return out;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs_up_to_iso(n)) {
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_edge_prob) {
    if (n < 1 || n > kMaxVertices) throw size_limit_error("order outside supported range");
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) {
        const int parent = static_cast<int>(std::uniform_int_distribution<int>(0, v - 1)(rng));
        es.emplace_back(parent, v);
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < extra_edge_prob) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    if (n < 0 || n > kMaxVertices) throw size_limit_error("order outside supported range");
    std::vector<Edge> es;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph random_connected_split_graph(std::mt19937_64& rng, int n) {
    if (n < 2 || n > kMaxVertices) throw size_limit_error("order outside supported range");
    const int c = std::uniform_int_distribution<int>(1, n - 1)(rng);
    std::vector<Edge> es;
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v) es.emplace_back(u, v);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = c; v < n; ++v) {
        bool attached = false;
        for (int u = 0; u < c; ++u) {
            if (coin(rng) < 0.5) {
                es.emplace_back(u, v);
                attached = true;
            }
        }
        if (!attached)
            es.emplace_back(std::uniform_int_distribution<int>(0, c - 1)(rng), v);
    }
    return Graph(n, es);
}

}  // namespace powdom
