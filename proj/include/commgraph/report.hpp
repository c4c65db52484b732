#pragma once

#include <string>

#include "json.hpp"

#include "commgraph/theorem_checker.hpp"

namespace commgraph {

// {group: {order, center_size, derived_size, index},
//  factorization: {n_gen, a_gens} | null,
//  graph: {vertices, edges, connected, diameter | null, radius | null, components: [{size, complete}]},
//  verdicts: [{claim, status, detail | null, note | null}]}
// Keys are emitted sorted, so equal reports serialize byte-identically.
nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json verdicts_json(const AnalysisReport& report);
nlohmann::json to_json(const SweepSummary& summary);

std::string to_text(const AnalysisReport& report);
std::string verdicts_text(const AnalysisReport& report);
std::string to_text(const SweepSummary& summary);

}  // namespace commgraph
