#pragma once

// JSON and plain-text renderings of analysis results.
//
// Analysis document keys, in this order: roster, n, m, election_matrix,
// sum_matrix, mean_matrix, majority_relation, outcome_class, strata,
// none_whipped, condition_report, mean_ranks. Rationals are "p/q" strings;
// positions are 1-based; the majority relation uses ">", "=", "<" with null
// on the diagonal.

#include <string>

#include "json.hpp"

#include "whipcheck/analysis.hpp"
#include "whipcheck/oracle.hpp"

namespace whipcheck {

using Json = nlohmann::ordered_json;

Json to_json(const AggregateReport& report);
Json to_json(const ConditionReport& conditions, const AlternativeRoster& roster);
Json to_json(const VerificationReport& report);
Json to_json(const SimulationConfig& config, const Estimate& estimate);

std::string render_text(const AggregateReport& report);
std::string render_text(const ConditionReport& conditions, const AlternativeRoster& roster);
std::string render_text(const VerificationReport& report);
std::string render_text(const SimulationConfig& config, const Estimate& estimate);

/// CSV with header `m,n,culture,trials,seed,hits,estimate,standard_error`.
std::string csv_header();
std::string csv_row(const SimulationConfig& config, const Estimate& estimate);

}  // namespace whipcheck
