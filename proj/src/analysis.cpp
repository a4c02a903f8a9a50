#include "whipcheck/analysis.hpp"

namespace whipcheck {

AggregateReport analyze(const Profile& profile) {
  auto election = election_matrix(profile);
  auto sum = sum_matrix(profile);
  auto mean = sum;
  mean /= Rational(mpz_class(profile.criteria()));
  auto relation = majority_relation(election);
  auto outcome = classify_outcome(relation);
  auto verdict = whip_verdict(outcome);

  ConditionReport conditions;
  conditions.election_symmetric = check_election_symmetry(election);
  conditions.mean_uniform = check_mean_uniform(mean);
  conditions.dual_relation = check_dual_relation(sum);
  conditions.borda_equal = check_borda_equal(mean);

  auto ranks = whipcheck::mean_ranks(mean);
  return AggregateReport{profile.roster(),     profile.criteria(),    std::move(election),
                         std::move(sum),       std::move(mean),       std::move(relation),
                         std::move(outcome),   std::move(verdict),    std::move(conditions),
                         std::move(ranks)};
}

}  // namespace whipcheck
