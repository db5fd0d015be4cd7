#pragma once

#include <string>

#include <json.hpp>

#include "powdom/bounds.hpp"
#include "powdom/families.hpp"
#include "powdom/propagation.hpp"
#include "powdom/solver.hpp"
#include "powdom/zero_forcing.hpp"

namespace powdom {

// Key order is fixed (ordered_json) so CLI output is byte-stable. Solver wall
// time is deliberately left out of the JSON for the same reason.

nlohmann::ordered_json to_json(const VertexSet& s);
nlohmann::ordered_json to_json(const Graph& g);
nlohmann::ordered_json to_json(const PropagationTrace& t);
nlohmann::ordered_json to_json(const ForcingSequence& seq, const ForcingChains& chains);
nlohmann::ordered_json to_json(const SolveResult& r);
nlohmann::ordered_json to_json(const BoundEntry& e);
nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const FamilyProfile& p);
nlohmann::ordered_json to_json(const FamilyInstance& f);

/// CSV rows (one per graph x bound) matching the JSON entries; includes a
/// header when `header` is set.
std::string bound_report_csv(const BoundReport& r, bool header = false);

}  // namespace powdom
