#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powdom/graph.hpp"
#include "powdom/solver.hpp"
#include "powdom/structure.hpp"

namespace powdom {

/// Structural classes that gate bound applicability, detected exactly.
struct StructureFlags {
    bool connected = false;
    bool complete = false;
    bool complete_minus_pm = false;  ///< even n, (n-2)-regular
    bool split = false;
    std::optional<SplitPartition> partition;
};

StructureFlags classify(const Graph& g);

struct GraphInvariants {
    int n = 0;
    int delta = 0;
    int Delta = 0;
    std::optional<int> omega;
    int gamma_p = 0;
    int rad_p = 0;
    StructureFlags flags;
};

/// One audited bound. `bound_value` is meaningful only when evaluated;
/// `satisfied` must hold for every applicable bound on every graph.
struct BoundEntry {
    std::string bound_id;
    bool applicable = false;
    std::string reason;     ///< why inapplicable / not evaluated
    bool evaluated = false;
    double bound_value = 0.0;
    std::string relation;   ///< "<=" or ">=" (rad_p REL bound_value)
    bool satisfied = false;
    bool tight = false;
};

struct BoundReport {
    std::string graph_id;
    GraphInvariants invariants;
    std::vector<BoundEntry> entries;
    std::vector<std::string> annotations;

    const BoundEntry& entry(const std::string& id) const;
    bool any_violation() const;
};

struct AuditOptions {
    int clique_limit = 64;  ///< omega via branch and bound only up to here
};

/// Evaluates the full bound catalog B1..B7 against exactly computed
/// invariants. `solve_result` must come from solve(g) (or the per-component
/// variant for disconnected input).
BoundReport audit(const Graph& g, const SolveResult& solve_result,
                  const std::string& graph_id = "", const AuditOptions& options = {});

}  // namespace powdom
