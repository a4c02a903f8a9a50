#pragma once

#include <vector>

#include "whipcheck/conditions.hpp"
#include "whipcheck/majority.hpp"
#include "whipcheck/model.hpp"
#include "whipcheck/prefmaps.hpp"
#include "whipcheck/rational.hpp"

namespace whipcheck {

/// Everything derived from one profile.
struct AggregateReport {
  AlternativeRoster roster;
  std::uint64_t criteria;
  ElectionMatrix election;
  RationalMatrix sum;
  RationalMatrix mean;
  MajorityRelation relation;
  OutcomeClass outcome;
  WhipVerdict verdict;
  ConditionReport conditions;
  std::vector<Rational> mean_ranks;
};

AggregateReport analyze(const Profile& profile);

}  // namespace whipcheck
