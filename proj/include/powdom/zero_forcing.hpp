#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powdom/graph.hpp"

namespace powdom {

/// Deterministic rule for choosing one force per tick when several
/// (forcer, target) pairs are eligible. Zero forcing is strictly sequential
/// here, unlike the propagation engine; the two semantics agree on which
/// sets succeed but not on step counts.
struct ForcePolicy {
    enum class Kind { lex_min, prefer_forcer, random };

    Kind kind = Kind::lex_min;
    int preferred = -1;     ///< prefer_forcer only
    uint64_t seed = 0;      ///< random only

    static ForcePolicy lex_min() { return {}; }
    static ForcePolicy prefer_forcer(int v) { return {Kind::prefer_forcer, v, 0}; }
    static ForcePolicy random(uint64_t seed) { return {Kind::random, -1, seed}; }

    std::string tag() const;
};

/// Chronological list of single forces from an initial set.
struct ForcingSequence {
    VertexSet initial;
    std::vector<std::pair<int, int>> forces;  ///< (forcer, target)
    std::string policy_tag;
};

/// Maximal forcing chains of a sequence and their terminal set.
struct ForcingChains {
    std::vector<std::vector<int>> chains;
    VertexSet reversal;
};

/// Closure of s under the forcing rule (order-independent).
VertexSet forcing_closure(const Graph& g, const VertexSet& s);

bool is_zfs(const Graph& g, const VertexSet& s);

/// Complete forcing sequence under the given policy; throws if s is not a ZFS.
ForcingSequence forcing_sequence(const Graph& g, const VertexSet& s,
                                 const ForcePolicy& policy = ForcePolicy::lex_min());

/// Links the forces of a complete sequence into maximal chains. Every initial
/// vertex heads exactly one chain (possibly of length one); the reversal is
/// the set of chain terminals.
ForcingChains chains_and_reversal(const ForcingSequence& seq);

/// Checks both directions of the reversal property over `trials` random
/// policies: every reversal Z is a ZFS, and replaying the chains backwards
/// yields a forcing sequence from Z whose reversal is exactly s.
bool check_reversal_lemma(const Graph& g, const VertexSet& s, int trials, uint64_t seed = 0);

}  // namespace powdom
