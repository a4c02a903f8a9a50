#include "whipcheck/conditions.hpp"

#include "whipcheck/prefmaps.hpp"

namespace whipcheck {

CheckResult<PairWitness> check_election_symmetry(const ElectionMatrix& em) {
  for (AltIndex i = 0; i < em.dim(); ++i) {
    for (AltIndex k = i + 1; k < em.dim(); ++k) {
      if (em.at(i, k) != em.at(k, i)) return {false, PairWitness{i, k}};
    }
  }
  return {};
}

CheckResult<CellWitness> check_mean_uniform(const RationalMatrix& mean) {
  const Rational uniform = ratio(1, static_cast<long>(mean.dim()));
  for (AltIndex i = 0; i < mean.dim(); ++i) {
    for (std::size_t col = 0; col < mean.dim(); ++col) {
      if (mean.at(i, col) != uniform) return {false, CellWitness{i, col + 1}};
    }
  }
  return {};
}

CheckResult<MirrorWitness> check_dual_relation(const RationalMatrix& matrix) {
  const auto m = matrix.dim();
  for (AltIndex i = 0; i < m; ++i) {
    for (std::size_t col = 0; col < m / 2; ++col) {
      const auto mirror = m - 1 - col;
      if (matrix.at(i, col) != matrix.at(i, mirror)) {
        return {false, MirrorWitness{i, col + 1, mirror + 1}};
      }
    }
  }
  return {};
}

CheckResult<PairWitness> check_borda_equal(const RationalMatrix& mean) {
  if (mean.dim() == 0) return {};
  const auto ranks = mean_ranks(mean);
  for (AltIndex i = 1; i < ranks.size(); ++i) {
    if (ranks[i] != ranks[0]) return {false, PairWitness{0, i}};
  }
  return {};
}

ConditionReport full_condition_report(const Profile& profile) {
  const auto mean = mean_matrix(profile);
  ConditionReport report;
  report.election_symmetric = check_election_symmetry(election_matrix(profile));
  report.mean_uniform = check_mean_uniform(mean);
  report.dual_relation = check_dual_relation(mean);
  report.borda_equal = check_borda_equal(mean);
  return report;
}

}  // namespace whipcheck
