#pragma once

#include <cstddef>
#include <optional>

#include "whipcheck/majority.hpp"
#include "whipcheck/model.hpp"
#include "whipcheck/rational.hpp"

namespace whipcheck {

/// Outcome of one condition check. `witness` is set iff the check fails and
/// names the lexicographically smallest violation.
template <class Witness>
struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// a(first, second) != a(second, first).
struct PairWitness {
  AltIndex first = 0;
  AltIndex second = 0;
  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// Entry (alternative, position) breaks the rule. Positions are 1-based.
struct CellWitness {
  AltIndex alternative = 0;
  std::size_t position = 1;
  friend bool operator==(const CellWitness&, const CellWitness&) = default;
};

/// Row `alternative` differs at `position` and its mirror m+1-position.
struct MirrorWitness {
  AltIndex alternative = 0;
  std::size_t position = 1;
  std::size_t mirror = 1;
  friend bool operator==(const MirrorWitness&, const MirrorWitness&) = default;
};

/// Sufficient condition on the election matrix: a(i,k) = a(k,i) for all pairs.
CheckResult<PairWitness> check_election_symmetry(const ElectionMatrix& em);

/// Every mean-matrix entry equals 1/m.
CheckResult<CellWitness> check_mean_uniform(const RationalMatrix& mean);

/// Every row is a palindrome: entry (i,k) = entry (i, m+1-k). For odd m the
/// middle column pairs with itself. Sum and mean matrices give the same answer.
CheckResult<MirrorWitness> check_dual_relation(const RationalMatrix& matrix);

/// All mean ranks are equal. The witness pairs alternative 0 with the first
/// alternative whose mean rank differs.
CheckResult<PairWitness> check_borda_equal(const RationalMatrix& mean);

struct ConditionReport {
  CheckResult<PairWitness> election_symmetric;
  CheckResult<CellWitness> mean_uniform;
  CheckResult<MirrorWitness> dual_relation;
  CheckResult<PairWitness> borda_equal;

  /// True when a condition that guarantees the none-whipped verdict holds.
  bool any_sufficient() const noexcept {
    return election_symmetric.holds || mean_uniform.holds || dual_relation.holds;
  }

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

ConditionReport full_condition_report(const Profile& profile);

}  // namespace whipcheck
