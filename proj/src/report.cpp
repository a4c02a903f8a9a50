#include "whipcheck/report.hpp"

#include <iomanip>
#include <sstream>

#include "whipcheck/profile_io.hpp"

namespace whipcheck {

namespace {

const char* relation_symbol(Social s) {
  switch (s) {
    case Social::Beats: return ">";
    case Social::Ties: return "=";
    case Social::LosesTo: return "<";
  }
  return "?";
}

Json names_of(const Stratum& stratum, const AlternativeRoster& roster) {
  Json out = Json::array();
  for (AltIndex i : stratum) out.push_back(roster.name(i));
  return out;
}

Json fraction_grid_json(const RationalMatrix& matrix) {
  Json out = Json::array();
  for (const auto& row : to_fraction_grid(matrix)) out.push_back(row);
  return out;
}

std::string exact_double(double value) {
  std::ostringstream os;
  os << std::setprecision(17) << value;
  return os.str();
}

std::string join_names(const Stratum& stratum, const AlternativeRoster& roster, const char* sep) {
  std::string out;
  for (std::size_t t = 0; t < stratum.size(); ++t) {
    if (t > 0) out += sep;
    out += roster.name(stratum[t]);
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json to_json(const ConditionReport& conditions, const AlternativeRoster& roster) {
  Json out;
  out["election_symmetric"] = conditions.election_symmetric.holds;
  out["mean_uniform"] = conditions.mean_uniform.holds;
  out["dual_relation"] = conditions.dual_relation.holds;
  out["borda_equal"] = conditions.borda_equal.holds;
  out["any_sufficient"] = conditions.any_sufficient();

  Json witnesses = Json::object();
  if (const auto& w = conditions.election_symmetric.witness) {
    witnesses["election_symmetric"] = {{"alternatives", {roster.name(w->first), roster.name(w->second)}}};
  }
  if (const auto& w = conditions.mean_uniform.witness) {
    witnesses["mean_uniform"] = {{"alternative", roster.name(w->alternative)}, {"position", w->position}};
  }
  if (const auto& w = conditions.dual_relation.witness) {
    witnesses["dual_relation"] = {{"alternative", roster.name(w->alternative)},
                                  {"positions", {w->position, w->mirror}}};
  }
  if (const auto& w = conditions.borda_equal.witness) {
    witnesses["borda_equal"] = {{"alternatives", {roster.name(w->first), roster.name(w->second)}}};
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json to_json(const AggregateReport& report) {
  const auto m = report.roster.size();
  Json out;
  out["roster"] = report.roster.names();
  out["n"] = report.criteria;
  out["m"] = m;

  Json election = Json::array();
  for (AltIndex i = 0; i < m; ++i) {
    Json row = Json::array();
    for (AltIndex k = 0; k < m; ++k) row.push_back(report.election.at(i, k));
    election.push_back(std::move(row));
  }
  out["election_matrix"] = std::move(election);
  out["sum_matrix"] = fraction_grid_json(report.sum);
  out["mean_matrix"] = fraction_grid_json(report.mean);

  Json relation = Json::array();
  for (AltIndex i = 0; i < m; ++i) {
    Json row = Json::array();
    for (AltIndex k = 0; k < m; ++k) {
      if (i == k) {
        row.push_back(nullptr);
      } else {
        row.push_back(relation_symbol(report.relation.at(i, k)));
      }
    }
    relation.push_back(std::move(row));
  }
  out["majority_relation"] = std::move(relation);
  out["outcome_class"] = std::string(to_string(report.outcome.tag));

  Json strata = Json::array();
  for (const auto& stratum : report.outcome.strata) strata.push_back(names_of(stratum, report.roster));
  out["strata"] = std::move(strata);
  out["none_whipped"] = report.verdict.none_whipped;
  out["condition_report"] = to_json(report.conditions, report.roster);

  Json ranks = Json::array();
  for (const auto& r : report.mean_ranks) ranks.push_back(to_fraction_string(r));
  out["mean_ranks"] = std::move(ranks);
  return out;
}

Json to_json(const VerificationReport& report) {
  Json out;
  out["m"] = report.m;
  out["n"] = report.n;
  out["profiles"] = report.profiles;
  Json outcomes;
  for (auto tag : {OutcomeTag::AllIndifferent, OutcomeTag::PureCycle, OutcomeTag::MixedConnected,
                   OutcomeTag::Separable}) {
    outcomes[std::string(to_string(tag))] = report.outcome_counts[static_cast<std::size_t>(tag)];
  }
  out["outcome_counts"] = std::move(outcomes);
  out["none_whipped"] = report.none_whipped;
  out["election_symmetric"] = report.election_symmetric;
  out["mean_uniform"] = report.mean_uniform;
  out["dual_relation"] = report.dual_relation;
  out["borda_equal"] = report.borda_equal;

  Json violations;
  for (std::size_t v = 0; v < kImplicationCount; ++v) {
    violations[std::string(to_string(static_cast<Implication>(v)))] = report.violations[v];
  }
  out["violations"] = std::move(violations);

  Json examples = Json::array();
  const auto roster = AlternativeRoster::numbered(std::max<std::size_t>(report.m, 2));
  for (const auto& ce : report.counterexamples) {
    Json orders = Json::array();
    for (const auto& order : ce.orders) orders.push_back(render_ranking(order, roster));
    examples.push_back({{"index", ce.index},
                        {"implication", std::string(to_string(ce.implication))},
                        {"orders", std::move(orders)}});
  }
  out["counterexamples"] = std::move(examples);
  return out;
}

Json to_json(const SimulationConfig& config, const Estimate& estimate) {
  Json out;
  out["m"] = config.m;
  out["n"] = config.n;
  out["culture"] = std::string(to_string(config.culture));
  out["trials"] = estimate.trials;
  out["seed"] = config.seed;
  out["rng"] = "std::mt19937_64";
  out["hits"] = estimate.hits;
  out["estimate"] = estimate.point;
  out["standard_error"] = estimate.standard_error;
  return out;
}

std::string render_text(const ConditionReport& conditions, const AlternativeRoster& roster) {
  std::ostringstream os;
  os << "election matrix symmetric: " << yes_no(conditions.election_symmetric.holds);
  if (const auto& w = conditions.election_symmetric.witness) {
    os << "  (" << roster.name(w->first) << " vs " << roster.name(w->second) << ")";
  }
  os << "\nmean matrix uniform:       " << yes_no(conditions.mean_uniform.holds);
  if (const auto& w = conditions.mean_uniform.witness) {
    os << "  (" << roster.name(w->alternative) << ", position " << w->position << ")";
  }
  os << "\ndual relation:             " << yes_no(conditions.dual_relation.holds);
  if (const auto& w = conditions.dual_relation.witness) {
    os << "  (" << roster.name(w->alternative) << ", positions " << w->position << " and "
       << w->mirror << ")";
  }
  os << "\nequal Borda counts:        " << yes_no(conditions.borda_equal.holds);
  if (const auto& w = conditions.borda_equal.witness) {
    os << "  (" << roster.name(w->first) << " vs " << roster.name(w->second) << ")";
  }
  os << "\nsufficient condition met:  " << yes_no(conditions.any_sufficient()) << "\n";
  return os.str();
}

std::string render_text(const AggregateReport& report) {
  const auto m = report.roster.size();
  std::ostringstream os;
  os << "alternatives: " << m << ", criteria: " << report.criteria << "\n\nelection matrix\n";
  for (AltIndex i = 0; i < m; ++i) {
    os << "  " << std::setw(8) << std::left << report.roster.name(i) << std::right;
    for (AltIndex k = 0; k < m; ++k) os << std::setw(6) << report.election.at(i, k);
    os << "\n";
  }
  os << "\nsum matrix (columns are positions 1.." << m << ")\n";
  for (AltIndex i = 0; i < m; ++i) {
    os << "  " << std::setw(8) << std::left << report.roster.name(i) << std::right;
    for (std::size_t c = 0; c < m; ++c) os << std::setw(10) << report.sum.at(i, c).get_str();
    os << "   mean rank " << report.mean_ranks[i].get_str() << "\n";
  }
  os << "\nmajority relation\n";
  for (AltIndex i = 0; i < m; ++i) {
    for (AltIndex k = i + 1; k < m; ++k) {
      os << "  " << report.roster.name(i) << " " << relation_symbol(report.relation.at(i, k)) << " "
         << report.roster.name(k) << "\n";
    }
  }
  os << "\noutcome: " << to_string(report.outcome.tag) << "\nstrata:";
  for (const auto& stratum : report.outcome.strata) os << " {" << join_names(stratum, report.roster, ", ") << "}";
  os << "\nnone whipped: " << yes_no(report.verdict.none_whipped) << "\n";
  if (!report.verdict.none_whipped) {
    os << "rewarded: " << join_names(report.verdict.rewarded, report.roster, ", ")
       << "\nyanked:   " << join_names(report.verdict.yanked, report.roster, ", ") << "\n";
  }
  os << "\n" << render_text(report.conditions, report.roster);
  return os.str();
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "m=" << report.m << " n=" << report.n << ": " << report.profiles << " ordered profiles\n";
  for (auto tag : {OutcomeTag::AllIndifferent, OutcomeTag::PureCycle, OutcomeTag::MixedConnected,
                   OutcomeTag::Separable}) {
    os << "  " << std::setw(16) << std::left << to_string(tag) << std::right
       << report.outcome_counts[static_cast<std::size_t>(tag)] << "\n";
  }
  os << "none whipped: " << report.none_whipped << "\nelection symmetric: " << report.election_symmetric
     << "\nmean uniform: " << report.mean_uniform << "\ndual relation: " << report.dual_relation
     << "\nequal Borda counts: " << report.borda_equal << "\n";
  for (std::size_t v = 0; v < kImplicationCount; ++v) {
    os << "violations of " << to_string(static_cast<Implication>(v)) << ": " << report.violations[v]
       << "\n";
  }
  const auto roster = AlternativeRoster::numbered(std::max<std::size_t>(report.m, 2));
  for (const auto& ce : report.counterexamples) {
    os << "counterexample #" << ce.index << " (" << to_string(ce.implication) << ")\n";
    for (const auto& order : ce.orders) os << "  " << render_ranking(order, roster) << "\n";
  }
  return os.str();
}

std::string render_text(const SimulationConfig& config, const Estimate& estimate) {
  std::ostringstream os;
  os << "m=" << config.m << " n=" << config.n << " culture=" << to_string(config.culture)
     << " trials=" << estimate.trials << " seed=" << config.seed << "\n"
     << "P(none whipped) ~ " << std::setprecision(6) << estimate.point << " +/- "
     << estimate.standard_error << " (" << estimate.hits << " hits)\n";
  return os.str();
}

std::string csv_header() { return "m,n,culture,trials,seed,hits,estimate,standard_error\n"; }

std::string csv_row(const SimulationConfig& config, const Estimate& estimate) {
  std::ostringstream os;
  os << config.m << "," << config.n << "," << to_string(config.culture) << "," << estimate.trials
     << "," << config.seed << "," << estimate.hits << "," << exact_double(estimate.point) << ","
     << exact_double(estimate.standard_error) << "\n";
  return os.str();
}

}  // namespace whipcheck
