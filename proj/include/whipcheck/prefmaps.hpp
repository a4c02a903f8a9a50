#pragma once

#include <cstddef>
#include <vector>

#include "whipcheck/model.hpp"
#include "whipcheck/rational.hpp"

namespace whipcheck {

/// Contiguous run of 1-based ranking positions {first, ..., last}.
struct PositionRange {
  std::size_t first = 1;
  std::size_t last = 1;

  std::size_t size() const noexcept { return last - first + 1; }
  bool contains(std::size_t position) const noexcept {
    return position >= first && position <= last;
  }
  friend bool operator==(const PositionRange&, const PositionRange&) = default;
};

/// For each alternative, the positions it may occupy under one criterion.
/// Alternative i with s strictly better and t tied (itself included) maps to
/// {s+1, ..., s+t}.
using PreferenceMap = std::vector<PositionRange>;

PreferenceMap preference_map(const WeakOrder& order);

/// Preference probability map: row i spreads probability 1/|PM_i| uniformly
/// over PM_i. Column c (0-based) stands for position c+1. Doubly stochastic.
RationalMatrix ppm(const PreferenceMap& pm);

inline RationalMatrix ppm(const WeakOrder& order) { return ppm(preference_map(order)); }

/// Multiplicity-weighted sum of the profile's PPMs. Rows and columns sum to n.
RationalMatrix sum_matrix(const Profile& profile);

/// sum_matrix / n. Entry (i, c) is the probability that i lands at position c+1.
RationalMatrix mean_matrix(const Profile& profile);

/// Expected 1-based position of alternative i under a mean matrix:
/// sum over positions k of k * p(i, k). Throws std::out_of_range if i is not
/// a row of the matrix.
Rational mean_rank(const RationalMatrix& mean, AltIndex i);

std::vector<Rational> mean_ranks(const RationalMatrix& mean);

}  // namespace whipcheck
