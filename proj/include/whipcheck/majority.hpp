#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "whipcheck/model.hpp"

namespace whipcheck {

/// a(i,k): number of criteria ranking i strictly before k. Ties count for
/// neither side; the diagonal is zero.
class ElectionMatrix {
 public:
  ElectionMatrix(std::size_t dim, std::uint64_t criteria)
      : dim_(dim), criteria_(criteria), counts_(dim * dim, 0) {}

  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t criteria() const noexcept { return criteria_; }

  std::uint64_t at(AltIndex i, AltIndex k) const { return counts_.at(i * dim_ + k); }
  std::uint64_t& at(AltIndex i, AltIndex k) { return counts_.at(i * dim_ + k); }

  /// Criteria ranking i and k in the same class.
  std::uint64_t ties(AltIndex i, AltIndex k) const { return criteria_ - at(i, k) - at(k, i); }

  friend bool operator==(const ElectionMatrix&, const ElectionMatrix&) = default;

 private:
  std::size_t dim_;
  std::uint64_t criteria_;
  std::vector<std::uint64_t> counts_;
};

ElectionMatrix election_matrix(const Profile& profile);

enum class Social { Beats, Ties, LosesTo };

/// Simple-majority comparison of every ordered pair.
class MajorityRelation {
 public:
  explicit MajorityRelation(std::size_t dim) : dim_(dim), cells_(dim * dim, Social::Ties) {}

  std::size_t dim() const noexcept { return dim_; }

  /// Throws ModelError(SameAlternative) on the diagonal.
  Social at(AltIndex i, AltIndex k) const;
  void set(AltIndex i, AltIndex k, Social value) { cells_.at(i * dim_ + k) = value; }

  /// Edge i -> k of the weak-majority digraph: i beats or ties k.
  bool weakly_beats(AltIndex i, AltIndex k) const { return i != k && at(i, k) != Social::LosesTo; }

  friend bool operator==(const MajorityRelation&, const MajorityRelation&) = default;

 private:
  std::size_t dim_;
  std::vector<Social> cells_;
};

MajorityRelation majority_relation(const ElectionMatrix& em);

enum class OutcomeTag { AllIndifferent, PureCycle, MixedConnected, Separable };

std::string_view to_string(OutcomeTag tag);

using Stratum = std::vector<AltIndex>;

struct OutcomeClass {
  OutcomeTag tag = OutcomeTag::AllIndifferent;
  /// Strongly connected components of the weak-majority digraph, best first.
  /// A single stratum holding every alternative unless the tag is Separable.
  std::vector<Stratum> strata;

  friend bool operator==(const OutcomeClass&, const OutcomeClass&) = default;
};

OutcomeClass classify_outcome(const MajorityRelation& rel);

struct WhipVerdict {
  bool none_whipped = true;
  Stratum rewarded;
  Stratum yanked;

  friend bool operator==(const WhipVerdict&, const WhipVerdict&) = default;
};

WhipVerdict whip_verdict(const OutcomeClass& oc);

/// election_matrix -> majority_relation -> classify_outcome.
OutcomeClass classify_profile(const Profile& profile);

}  // namespace whipcheck
