#include "powdom/json_io.hpp"

#include <sstream>

namespace powdom {

using nlohmann::ordered_json;

ordered_json to_json(const VertexSet& s) {
    auto arr = ordered_json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

ordered_json to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.order();
    auto arr = ordered_json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    j["edges"] = std::move(arr);
    return j;
}

ordered_json to_json(const PropagationTrace& t) {
    ordered_json j;
    j["source"] = to_json(t.source);
    auto layers = ordered_json::array();
    for (const auto& l : t.layers) layers.push_back(to_json(l));
    j["layers"] = std::move(layers);
    auto live = ordered_json::array();
    for (const auto& l : t.live) live.push_back(to_json(l));
    j["live"] = std::move(live);
    auto props = ordered_json::array();
    for (const auto& f : t.propagators) props.push_back({f.step, f.from, f.to});
    j["propagators"] = std::move(props);
    j["complete"] = t.complete;
    j["excess"] = t.excess;
    return j;
}

ordered_json to_json(const ForcingSequence& seq, const ForcingChains& chains) {
    ordered_json j;
    j["initial"] = to_json(seq.initial);
    auto forces = ordered_json::array();
    for (auto [p, x] : seq.forces) forces.push_back({p, x});
    j["forces"] = std::move(forces);
    j["policy"] = seq.policy_tag;
    auto cs = ordered_json::array();
    for (const auto& chain : chains.chains) cs.push_back(chain);
    j["chains"] = std::move(cs);
    j["reversal"] = to_json(chains.reversal);
    return j;
}

ordered_json to_json(const SolveResult& r) {
    ordered_json j;
    j["gamma_p"] = r.gamma_p;
    j["rad_p"] = r.rad_p;
    j["witness"] = to_json(r.witness);
    if (r.rad_p_any_pds != r.rad_p) {
        j["rad_p_any_pds"] = r.rad_p_any_pds;
        j["definition_sensitive"] = true;
    }
    if (!r.all_min_pds.empty()) {
        auto arr = ordered_json::array();
        for (const auto& s : r.all_min_pds) arr.push_back(to_json(s));
        j["all_min_pds"] = std::move(arr);
        if (r.all_min_pds_truncated) j["all_min_pds_truncated"] = true;
    }
    j["stats"] = {{"nodes_explored", r.stats.nodes_explored},
                  {"twin_prunes", r.stats.twin_prunes}};
    return j;
}

ordered_json to_json(const BoundEntry& e) {
    ordered_json j;
    j["bound_id"] = e.bound_id;
    j["applicable"] = e.applicable;
    if (!e.reason.empty()) j["reason"] = e.reason;
    if (e.evaluated) {
        j["bound_value"] = e.bound_value;
        j["relation"] = e.relation;
        j["satisfied"] = e.satisfied;
        j["tight"] = e.tight;
    }
    return j;
}

ordered_json to_json(const BoundReport& r) {
    ordered_json j;
    j["graph_id"] = r.graph_id;
    ordered_json inv;
    inv["n"] = r.invariants.n;
    inv["delta"] = r.invariants.delta;
    inv["Delta"] = r.invariants.Delta;
    if (r.invariants.omega) inv["omega"] = *r.invariants.omega;
    inv["gamma_p"] = r.invariants.gamma_p;
    inv["rad_p"] = r.invariants.rad_p;
    inv["is_connected"] = r.invariants.flags.connected;
    inv["is_complete"] = r.invariants.flags.complete;
    inv["is_complete_minus_pm"] = r.invariants.flags.complete_minus_pm;
    inv["is_split"] = r.invariants.flags.split;
    j["invariants"] = std::move(inv);
    auto entries = ordered_json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    j["bounds"] = std::move(entries);
    if (!r.annotations.empty()) j["annotations"] = r.annotations;
    return j;
}

ordered_json to_json(const FamilyProfile& p) {
    ordered_json j;
    j["n"] = p.n;
    j["delta"] = p.delta;
    if (p.Delta) j["Delta"] = *p.Delta;
    if (p.gamma_p) j["gamma_p"] = *p.gamma_p;
    if (p.rad_p) j["rad_p"] = *p.rad_p;
    if (!p.note.empty()) j["note"] = p.note;
    return j;
}

ordered_json to_json(const FamilyInstance& f) {
    ordered_json j;
    j["family"] = f.family;
    j["params"] = f.params;
    j["expected"] = to_json(f.expected);
    j["graph"] = to_json(f.graph);
    return j;
}

std::string bound_report_csv(const BoundReport& r, bool header) {
    std::ostringstream out;
    if (header)
        out << "graph_id,bound_id,applicable,relation,bound_value,rad_p,satisfied,tight\n";
    std::string id = r.graph_id;
    if (id.find(',') != std::string::npos || id.find('"') != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : id) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        id = quoted + "\"";
    }
    for (const auto& e : r.entries) {
        out << id << ',' << e.bound_id << ',' << (e.applicable ? 1 : 0) << ','
            << e.relation << ',';
        if (e.evaluated)
            out << e.bound_value;
        out << ',' << r.invariants.rad_p << ',' << (e.evaluated ? (e.satisfied ? "1" : "0") : "")
            << ',' << (e.evaluated ? (e.tight ? "1" : "0") : "") << '\n';
    }
    return out.str();
}

}  // namespace powdom
