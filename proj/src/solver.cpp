#include "powdom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <stdexcept>
#include <thread>

#include "powdom/propagation.hpp"

namespace powdom {

bool passes_twin_filter(const Graph& g, const std::vector<std::pair<int, int>>& twin_pairs,
                        const VertexSet& candidate) {
    const VertexSet nbhd = g.closed_neighborhood(candidate);
    for (auto [u, v] : twin_pairs)
        if (!nbhd.contains(u) && !nbhd.contains(v)) return false;
    return true;
}

namespace {

// Closure continued from an already-computed N[S].
Closure closure_from(const Graph& g, VertexSet monitored) {
    const VertexSet all = g.vertices();
    int steps = 1;
    while (monitored != all) {
        VertexSet newly;
        for (int v : monitored) {
            const VertexSet un = g.neighbors(v) - monitored;
            if (un.count() == 1) newly |= un;
        }
        if (newly.empty()) break;
        monitored |= newly;
        ++steps;
    }
    return {monitored, steps};
}

// All c-combinations of `ground` whose first element is ground[f0],
// in lexicographic order of index tuples.
template <typename Fn>
void combinations_with_first(int ground_size, int c, int f0, Fn&& fn) {
    std::vector<int> idx(static_cast<size_t>(c));
    idx[0] = f0;
    if (c == 1) {
        fn(idx);
        return;
    }
    for (int j = 1; j < c; ++j) idx[j] = f0 + j;
    if (idx[c - 1] >= ground_size) return;
    while (true) {
        fn(idx);
        int j = c - 1;
        while (j >= 1 && idx[j] == ground_size - (c - j)) --j;
        if (j == 0) break;
        ++idx[j];
        for (int k = j + 1; k < c; ++k) idx[k] = idx[k - 1] + 1;
    }
}

struct ChunkResult {
    bool found = false;
    int best_steps = INT_MAX;
    VertexSet best_set;
    std::vector<VertexSet> all;
    bool truncated = false;
    uint64_t nodes = 0;
    uint64_t prunes = 0;
};

ChunkResult scan_chunk(const Graph& g, const std::vector<int>& ground, int c, int f0,
                       const std::vector<std::pair<int, int>>& twin_pairs, bool use_twins,
                       bool collect_all, size_t all_cap) {
    ChunkResult r;
    combinations_with_first(static_cast<int>(ground.size()), c, f0, [&](const std::vector<int>& idx) {
        VertexSet cand;
        for (int i : idx) cand.insert(ground[static_cast<size_t>(i)]);
        const VertexSet nbhd = g.closed_neighborhood(cand);
        if (use_twins) {
            bool admissible = true;
            for (auto [u, v] : twin_pairs) {
                if (!nbhd.contains(u) && !nbhd.contains(v)) {
                    admissible = false;
                    break;
                }
            }
            if (!admissible) {
                ++r.prunes;
                return;
            }
        }
        ++r.nodes;
        const Closure cl = closure_from(g, nbhd);
        if (cl.monitored == g.vertices()) {
            r.found = true;
            if (cl.steps < r.best_steps) {
                r.best_steps = cl.steps;
                r.best_set = cand;
            }
            if (collect_all) {
                if (r.all.size() < all_cap)
                    r.all.push_back(cand);
                else
                    r.truncated = true;
            }
        }
    });
    return r;
}

SolveResult search(const Graph& g, const std::vector<int>& ground, const SolveOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto twin_pairs = twins(g);

    SolveResult result;
    for (int c = 1; c <= static_cast<int>(ground.size()); ++c) {
        const int nchunks = static_cast<int>(ground.size()) - c + 1;
        std::vector<ChunkResult> chunks(static_cast<size_t>(nchunks));
        const int nthreads = std::max(1, std::min(options.threads, nchunks));
        if (nthreads == 1) {
            for (int f0 = 0; f0 < nchunks; ++f0)
                chunks[static_cast<size_t>(f0)] =
                    scan_chunk(g, ground, c, f0, twin_pairs, options.use_twin_pruning,
                               options.enumerate_all, options.all_cap);
        } else {
            std::atomic<int> next{0};
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(nthreads));
            for (int t = 0; t < nthreads; ++t) {
                pool.emplace_back([&] {
                    for (int f0 = next.fetch_add(1); f0 < nchunks; f0 = next.fetch_add(1))
                        chunks[static_cast<size_t>(f0)] =
                            scan_chunk(g, ground, c, f0, twin_pairs, options.use_twin_pruning,
                                       options.enumerate_all, options.all_cap);
                });
            }
            for (auto& th : pool) th.join();
        }

        bool found = false;
        int best_steps = INT_MAX;
        VertexSet best_set;
        for (const auto& ch : chunks) {
            result.stats.nodes_explored += ch.nodes;
            result.stats.twin_prunes += ch.prunes;
            if (!ch.found) continue;
            found = true;
            if (ch.best_steps < best_steps) {
                best_steps = ch.best_steps;
                best_set = ch.best_set;
            }
            if (options.enumerate_all) {
                for (const auto& s : ch.all) {
                    if (result.all_min_pds.size() < options.all_cap)
                        result.all_min_pds.push_back(s);
                    else
                        result.all_min_pds_truncated = true;
                }
                result.all_min_pds_truncated |= ch.truncated;
            }
        }
        if (found) {
            result.gamma_p = c;
            result.rad_p = best_steps;
            result.witness = best_set;
            result.rad_p_any_pds = rad_of_set(g, g.vertices()).value();
            result.stats.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            return result;
        }
    }
    throw std::runtime_error("search exhausted the ground set without finding a PDS");
}

SolveResult solve_connected(const Graph& g, const SolveOptions& options) {
    std::vector<int> ground(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) ground[static_cast<size_t>(v)] = v;
    return search(g, ground, options);
}

void check_size(const Graph& g, const SolveOptions& options) {
    if (g.order() == 0) throw std::invalid_argument("solve: empty graph");
    if (g.order() > std::min(options.max_n, kMaxVertices))
        throw size_limit_error("solve: order " + std::to_string(g.order()) +
                               " exceeds limit " + std::to_string(options.max_n));
}

}  // namespace

SolveResult solve(const Graph& g, const SolveOptions& options) {
    check_size(g, options);
    if (is_connected(g)) return solve_connected(g, options);
    if (!options.per_component)
        throw std::invalid_argument("solve: graph is disconnected (enable per-component mode)");

    // gamma_p sums over components; rad_p is the worst component's.
    SolveResult merged;
    merged.rad_p = 0;
    merged.rad_p_any_pds = 0;
    std::vector<std::vector<VertexSet>> per_comp_all;
    std::vector<std::vector<int>> maps;
    const auto t0 = std::chrono::steady_clock::now();
    for (const VertexSet& comp : components(g)) {
        auto [sub, to_old] = induced_subgraph(g, comp);
        const SolveResult r = solve_connected(sub, options);
        merged.gamma_p += r.gamma_p;
        merged.rad_p = std::max(merged.rad_p, r.rad_p);
        merged.rad_p_any_pds = std::max(merged.rad_p_any_pds, r.rad_p_any_pds);
        for (int v : r.witness) merged.witness.insert(to_old[static_cast<size_t>(v)]);
        merged.stats.nodes_explored += r.stats.nodes_explored;
        merged.stats.twin_prunes += r.stats.twin_prunes;
        if (options.enumerate_all) {
            per_comp_all.push_back(r.all_min_pds);
            maps.push_back(to_old);
            merged.all_min_pds_truncated |= r.all_min_pds_truncated;
        }
    }
    if (options.enumerate_all) {
        // Cross product of the per-component minimum sets.
        std::vector<VertexSet> acc{VertexSet{}};
        for (size_t ci = 0; ci < per_comp_all.size(); ++ci) {
            std::vector<VertexSet> next;
            for (const auto& base : acc) {
                for (const auto& s : per_comp_all[ci]) {
                    if (next.size() >= options.all_cap) {
                        merged.all_min_pds_truncated = true;
                        break;
                    }
                    VertexSet u = base;
                    for (int v : s) u.insert(maps[ci][static_cast<size_t>(v)]);
                    next.push_back(u);
                }
            }
            acc = std::move(next);
        }
        merged.all_min_pds = std::move(acc);
    }
    merged.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return merged;
}

SolveResult split_restricted_solve(const Graph& g, const SplitPartition& part,
                                   const SolveOptions& options) {
    check_size(g, options);
    if (!is_connected(g))
        throw std::invalid_argument("split_restricted_solve: graph must be connected");
    if ((part.clique | part.independent) != g.vertices() ||
        part.clique.intersects(part.independent))
        throw std::invalid_argument("split_restricted_solve: not a partition of V");
    if (part.clique.empty() || part.independent.empty())
        throw std::invalid_argument("split_restricted_solve: C and I must be non-empty");

    const VertexSet ni = g.open_neighborhood(part.independent);
    std::vector<int> ground = ni.to_vector();
    if (ground.empty())
        throw std::invalid_argument("split_restricted_solve: N(I) is empty");
    return search(g, ground, options);
}

}  // namespace powdom
