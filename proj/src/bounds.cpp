#include "powdom/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace powdom {

StructureFlags classify(const Graph& g) {
    StructureFlags f;
    const int n = g.order();
    f.connected = is_connected(g);
    f.complete = n >= 1;
    for (int v = 0; v < n && f.complete; ++v)
        if (g.degree(v) != n - 1) f.complete = false;
    // (n-2)-regular on even n means the complement is 1-regular, i.e. a
    // perfect matching.
    f.complete_minus_pm = n >= 2 && n % 2 == 0;
    for (int v = 0; v < n && f.complete_minus_pm; ++v)
        if (g.degree(v) != n - 2) f.complete_minus_pm = false;
    f.partition = split_partition(g);
    f.split = f.partition.has_value();
    return f;
}

const BoundEntry& BoundReport::entry(const std::string& id) const {
    for (const auto& e : entries)
        if (e.bound_id == id) return e;
    throw std::out_of_range("no bound entry " + id);
}

bool BoundReport::any_violation() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const BoundEntry& e) { return e.applicable && e.evaluated && !e.satisfied; });
}

namespace {

BoundEntry upper(const std::string& id, long long bound_times2, int rad_p) {
    // Bounds compared at twice their value so the half-integer B6 stays exact.
    BoundEntry e;
    e.bound_id = id;
    e.applicable = true;
    e.evaluated = true;
    e.bound_value = static_cast<double>(bound_times2) / 2.0;
    e.relation = "<=";
    e.satisfied = 2LL * rad_p <= bound_times2;
    e.tight = 2LL * rad_p == bound_times2;
    return e;
}

BoundEntry not_applicable(const std::string& id, const std::string& reason) {
    BoundEntry e;
    e.bound_id = id;
    e.applicable = false;
    e.reason = reason;
    e.relation = id == "B7" ? ">=" : "<=";
    return e;
}

}  // namespace

BoundReport audit(const Graph& g, const SolveResult& solve_result, const std::string& graph_id,
                  const AuditOptions& options) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("audit: empty graph");

    BoundReport report;
    report.graph_id = graph_id;

    GraphInvariants& inv = report.invariants;
    inv.n = n;
    inv.delta = g.min_degree();
    inv.Delta = g.max_degree();
    inv.gamma_p = solve_result.gamma_p;
    inv.rad_p = solve_result.rad_p;
    inv.flags = classify(g);

    if (inv.flags.complete) {
        inv.omega = n;
    } else if (inv.flags.split) {
        inv.omega = inv.flags.partition->clique.count();
    } else if (n <= options.clique_limit) {
        inv.omega = clique_number(g, options.clique_limit);
    }

    if (solve_result.rad_p_any_pds != solve_result.rad_p)
        report.annotations.push_back(
            "definition-sensitive: minimum radius over all PDSs is " +
            std::to_string(solve_result.rad_p_any_pds) + " (attained by sets larger than gamma_p); "
            "audited rad_p minimizes over gamma_p-sets");
    if (inv.flags.partition && inv.flags.partition->donated)
        report.annotations.push_back(
            "split partition donated one clique vertex to keep the independent side non-empty");
    if (!inv.flags.connected)
        report.annotations.push_back(
            "disconnected: B1/B2 use per-component aggregated gamma_p/rad_p; B3-B7 inapplicable");

    const int rad = inv.rad_p;
    const int delta = inv.delta;
    const int gamma = inv.gamma_p;

    // B1: rad_p <= n - |N[S]| + 1 with S the solver witness.
    {
        const int covered = g.closed_neighborhood(solve_result.witness).count();
        report.entries.push_back(upper("B1", 2LL * (n - covered + 1), rad));
    }

    // B2: rad_p <= n - delta.
    report.entries.push_back(upper("B2", 2LL * (n - delta), rad));

    // B3: rad_p <= n - delta - 1 unless complete or complete-minus-matching.
    if (!inv.flags.connected)
        report.entries.push_back(not_applicable("B3", "disconnected"));
    else if (inv.flags.complete)
        report.entries.push_back(not_applicable("B3", "G = K_n"));
    else if (inv.flags.complete_minus_pm)
        report.entries.push_back(not_applicable("B3", "G = K_n - M"));
    else
        report.entries.push_back(upper("B3", 2LL * (n - delta - 1), rad));

    // B4: piecewise upper bound for gamma_p >= 2, delta >= 2, connected.
    if (!inv.flags.connected)
        report.entries.push_back(not_applicable("B4", "disconnected"));
    else if (gamma < 2)
        report.entries.push_back(not_applicable("B4", "gamma_p < 2"));
    else if (delta < 2)
        report.entries.push_back(not_applicable("B4", "delta < 2"));
    else {
        long long bound;
        if (gamma == 2 && delta == 2)
            bound = n - 5;
        else if (gamma == 2)
            bound = n - delta - 2;
        else
            bound = n - gamma - std::max(2 * gamma, gamma + delta) + 1;
        report.entries.push_back(upper("B4", 2 * bound, rad));
    }

    // B5 / B6: split-graph bounds. They presume a connected split graph whose
    // maximum-clique partition has both sides non-empty; complete graphs
    // cannot satisfy that (and B6 is false for K_1, K_2).
    const char* split_reason = !inv.flags.split          ? "not a split graph"
                               : !inv.flags.connected    ? "disconnected"
                               : inv.flags.complete      ? "complete: no max-clique partition with non-empty independent side"
                                                         : nullptr;
    if (split_reason) {
        report.entries.push_back(not_applicable("B5", split_reason));
        report.entries.push_back(not_applicable("B6", split_reason));
    } else {
        if (inv.omega) {
            report.entries.push_back(upper("B5", 2LL * (*inv.omega - gamma + 1), rad));
        } else {
            BoundEntry e = not_applicable("B5", "omega not evaluated (n over clique limit)");
            e.applicable = true;
            report.entries.push_back(e);
        }
        report.entries.push_back(upper("B6", n - 3LL * gamma + 2, rad));
    }

    // B7: rad_p >= (n - gamma_p) / (gamma_p * Delta), evaluated in exact
    // integer form gamma_p (rad_p Delta + 1) >= n.
    if (!inv.flags.connected) {
        report.entries.push_back(not_applicable("B7", "disconnected"));
    } else {
        BoundEntry e;
        e.bound_id = "B7";
        e.applicable = true;
        e.evaluated = true;
        e.relation = ">=";
        e.bound_value = inv.Delta > 0
                            ? static_cast<double>(n - gamma) / (static_cast<double>(gamma) * inv.Delta)
                            : 0.0;
        const long long lhs = static_cast<long long>(gamma) * (static_cast<long long>(rad) * inv.Delta + 1);
        e.satisfied = lhs >= n;
        e.tight = lhs == n;
        report.entries.push_back(e);
    }

    return report;
}

}  // namespace powdom
