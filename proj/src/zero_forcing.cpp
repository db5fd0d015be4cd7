#include "powdom/zero_forcing.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <stdexcept>

namespace powdom {

std::string ForcePolicy::tag() const {
    switch (kind) {
        case Kind::lex_min: return "min-forcer-min-target";
        case Kind::prefer_forcer: return "prefer-forcer:" + std::to_string(preferred);
        case Kind::random: return "random:" + std::to_string(seed);
    }
    return "?";
}

VertexSet forcing_closure(const Graph& g, const VertexSet& s) {
    VertexSet monitored = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : monitored) {
            const VertexSet un = g.neighbors(v) - monitored;
            if (un.count() == 1) {
                monitored |= un;
                changed = true;
            }
        }
    }
    return monitored;
}

bool is_zfs(const Graph& g, const VertexSet& s) {
    return forcing_closure(g, s) == g.vertices();
}

namespace {

std::vector<std::pair<int, int>> eligible_forces(const Graph& g, const VertexSet& monitored) {
    std::vector<std::pair<int, int>> out;
    for (int v : monitored) {
        const VertexSet un = g.neighbors(v) - monitored;
        if (un.count() == 1) out.emplace_back(v, un.first());
    }
    return out;  // sorted by forcer (iteration order), hence lex order
}

}  // namespace

ForcingSequence forcing_sequence(const Graph& g, const VertexSet& s, const ForcePolicy& policy) {
    if (!is_zfs(g, s)) throw std::invalid_argument("forcing_sequence: set is not a ZFS");

    std::mt19937_64 rng(policy.seed);
    ForcingSequence seq;
    seq.initial = s;
    seq.policy_tag = policy.tag();

    VertexSet monitored = s;
    while (monitored != g.vertices()) {
        auto options = eligible_forces(g, monitored);
        // Closure succeeded, so a force must exist until everything is seen.
        size_t pick = 0;
        switch (policy.kind) {
            case ForcePolicy::Kind::lex_min:
                break;
            case ForcePolicy::Kind::prefer_forcer: {
                auto it = std::find_if(options.begin(), options.end(),
                                       [&](const auto& f) { return f.first == policy.preferred; });
                if (it != options.end()) pick = static_cast<size_t>(it - options.begin());
                break;
            }
            case ForcePolicy::Kind::random:
                pick = std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng);
                break;
        }
        const auto [p, x] = options[pick];
        seq.forces.emplace_back(p, x);
        monitored.insert(x);
    }
    return seq;
}

ForcingChains chains_and_reversal(const ForcingSequence& seq) {
    std::array<int, kMaxVertices> out_of;
    out_of.fill(-1);
    for (auto [p, x] : seq.forces) out_of[p] = x;

    ForcingChains result;
    for (int head : seq.initial) {
        std::vector<int> chain{head};
        for (int v = out_of[head]; v >= 0; v = out_of[v]) chain.push_back(v);
        result.reversal.insert(chain.back());
        result.chains.push_back(std::move(chain));
    }
    return result;
}

namespace {

// Replays the forces backwards from the reversal; returns the replayed
// sequence or nullopt if some reversed force is not legal at its tick.
std::optional<ForcingSequence> reverse_replay(const Graph& g, const ForcingSequence& seq,
                                              const VertexSet& reversal) {
    ForcingSequence rev;
    rev.initial = reversal;
    rev.policy_tag = "reverse-replay";
    VertexSet monitored = reversal;
    for (auto it = seq.forces.rbegin(); it != seq.forces.rend(); ++it) {
        const auto [p, x] = *it;  // originally p -> x; replay as x -> p
        if (!monitored.contains(x)) return std::nullopt;
        const VertexSet un = g.neighbors(x) - monitored;
        if (!(un.count() == 1 && un.contains(p))) return std::nullopt;
        rev.forces.emplace_back(x, p);
        monitored.insert(p);
    }
    if (monitored != g.vertices()) return std::nullopt;
    return rev;
}

}  // namespace

bool check_reversal_lemma(const Graph& g, const VertexSet& s, int trials, uint64_t seed) {
    if (!is_zfs(g, s)) return false;
    for (int t = 0; t < trials; ++t) {
        const auto seq = forcing_sequence(g, s, ForcePolicy::random(seed + static_cast<uint64_t>(t)));
        const auto chains = chains_and_reversal(seq);
        if (!is_zfs(g, chains.reversal)) return false;
        const auto replay = reverse_replay(g, seq, chains.reversal);
        if (!replay) return false;
        if (chains_and_reversal(*replay).reversal != s) return false;
    }
    return true;
}

}  // namespace powdom
