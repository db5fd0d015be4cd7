#pragma once

#include <optional>
#include <vector>

#include "powdom/graph.hpp"

namespace powdom {

/// Full record of one power-domination run from a source set S:
/// the domination step P^1 = N[S] followed by synchronous propagation steps
/// until the first fixed point.
struct PropagationTrace {
    /// A single propagation event: `from` monitors its last unmonitored
    /// neighbor `to` while forming layer `step` (steps are 2-based; step 1
    /// is the domination step).
    struct Force {
        int step;
        int from;
        int to;
        friend bool operator==(const Force&, const Force&) = default;
    };

    VertexSet source;
    std::vector<VertexSet> layers;  ///< P^1, ..., P^k with P^k the fixed point
    std::vector<VertexSet> live;    ///< L^1, ..., L^k
    std::vector<Force> propagators;
    bool complete = false;  ///< P^k == V
    int excess = 0;         ///< sum over steps of (new vertices - 1)

    int steps() const { return static_cast<int>(layers.size()); }
};

/// Runs the process to its fixed point. All eligible vertices fire in the
/// same step; a vertex whose target was already claimed this step is still
/// recorded as a propagator and leaves the live set. Throws on empty s.
PropagationTrace propagate(const Graph& g, const VertexSet& s);

/// Monitored closure and step count without building a trace.
struct Closure {
    VertexSet monitored;
    int steps;
};
Closure power_closure(const Graph& g, const VertexSet& s);

/// True iff the closure of s covers V.
bool is_pds(const Graph& g, const VertexSet& s);

/// Number of steps to monitor V (domination step included), or nullopt if
/// the process stalls first.
std::optional<int> rad_of_set(const Graph& g, const VertexSet& s);

/// Excess of a power dominating set; throws if s is not a PDS.
int excess(const Graph& g, const VertexSet& s);

}  // namespace powdom
