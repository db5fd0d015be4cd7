#include "powdom/propagation.hpp"

#include <stdexcept>

namespace powdom {

PropagationTrace propagate(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("propagate: source set is empty");
    if (!s.is_subset_of(g.vertices()))
        throw std::invalid_argument("propagate: source set not within V");

    const VertexSet all = g.vertices();
    PropagationTrace t;
    t.source = s;

    VertexSet monitored = g.closed_neighborhood(s);
    t.layers.push_back(monitored);
    t.live.push_back(g.open_neighborhood(s) - s);

    VertexSet has_propagated;
    for (int step = 2;; ++step) {
        VertexSet newly;
        std::vector<PropagationTrace::Force> fires;
        for (int v : monitored) {
            const VertexSet un = g.neighbors(v) - monitored;
            if (un.count() == 1) {
                fires.push_back({step, v, un.first()});
                newly |= un;
            }
        }
        if (newly.empty()) break;
        monitored |= newly;
        for (const auto& f : fires) has_propagated.insert(f.from);
        t.layers.push_back(monitored);
        t.live.push_back((monitored - s) - has_propagated);
        t.propagators.insert(t.propagators.end(), fires.begin(), fires.end());
        if (monitored == all) break;
    }

    t.complete = monitored == all;
    t.excess = monitored.count() - t.steps();
    return t;
}

Closure power_closure(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("power_closure: source set is empty");
    const VertexSet all = g.vertices();
    VertexSet monitored = g.closed_neighborhood(s);
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

bool is_pds(const Graph& g, const VertexSet& s) {
    return power_closure(g, s).monitored == g.vertices();
}

std::optional<int> rad_of_set(const Graph& g, const VertexSet& s) {
    const Closure c = power_closure(g, s);
    if (c.monitored != g.vertices()) return std::nullopt;
    return c.steps;
}

int excess(const Graph& g, const VertexSet& s) {
    const PropagationTrace t = propagate(g, s);
    if (!t.complete) throw std::invalid_argument("excess: set is not a PDS");
    return t.excess;
}

}  // namespace powdom
