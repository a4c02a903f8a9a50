#pragma once

// Shared profiles and test-only oracles. The oracles here work from plain
// rank vectors (rank[i] = class number of alternative i, 0 = best) and never
// call into the library's aggregation code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "whipcheck/model.hpp"
#include "whipcheck/rational.hpp"

namespace whipcheck::testing {

using RankVector = std::vector<std::size_t>;

inline WeakOrder order_from_ranks(const RankVector& rank) {
  const auto classes = *std::max_element(rank.begin(), rank.end()) + 1;
  std::vector<WeakOrder::Class> out(classes);
  for (AltIndex i = 0; i < rank.size(); ++i) out[rank[i]].push_back(i);
  return make_weak_order(std::move(out), rank.size());
}

inline RankVector ranks_from_order(const WeakOrder& order) {
  RankVector rank(order.size());
  for (AltIndex i = 0; i < order.size(); ++i) rank[i] = order.class_of(i);
  return rank;
}

/// 1-based alternative numbers, best first: strict({1,2,3}) is x1 > x2 > x3.
inline WeakOrder strict(std::initializer_list<std::size_t> best_first) {
  std::vector<AltIndex> ranking;
  for (auto x : best_first) ranking.push_back(x - 1);
  return make_strict_order(ranking);
}

/// 1-based classes: weak({{1}, {2, 3, 4}}, 4) is x1 > x2 ~ x3 ~ x4.
inline WeakOrder weak(std::initializer_list<std::initializer_list<std::size_t>> classes, std::size_t m) {
  std::vector<WeakOrder::Class> out;
  for (const auto& cls : classes) {
    WeakOrder::Class c;
    for (auto x : cls) c.push_back(x - 1);
    out.push_back(std::move(c));
  }
  return make_weak_order(std::move(out), m);
}

inline Profile example1() {
  return Profile::from_orders({
      weak({{1}, {2, 3, 4}}, 4),
      weak({{2, 3, 4}, {1}}, 4),
      weak({{1, 2}, {3, 4}}, 4),
      weak({{3, 4}, {1, 2}}, 4),
      weak({{1, 2, 3, 4}}, 4),
  });
}

inline Profile example2() {
  return Profile::from_orders({
      strict({1, 2, 3, 4}),
      strict({1, 3, 4, 2}),
      strict({1, 4, 2, 3}),
      strict({2, 3, 4, 1}),
      strict({3, 4, 2, 1}),
      strict({4, 2, 3, 1}),
  });
}

inline Profile remark() {
  return Profile::from_orders({
      strict({1, 2, 3}),
      strict({1, 2, 3}),
      strict({2, 3, 1}),
      strict({2, 3, 1}),
      strict({3, 1, 2}),
  });
}

inline RationalMatrix matrix_of(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) out.at(r, c) = rows[r].at(c);
  }
  return out;
}

/// PPM by brute force: average the permutation matrices of every strict
/// order that refines the weak order (every way of breaking its ties).
inline RationalMatrix ppm_by_tie_breaking(const RankVector& rank) {
  const auto m = rank.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint64_t>> hits(m, std::vector<std::uint64_t>(m, 0));
  std::uint64_t extensions = 0;
  do {
    bool refines = true;
    for (std::size_t p = 0; p + 1 < m; ++p) refines &= rank[perm[p]] <= rank[perm[p + 1]];
    if (!refines) continue;
    ++extensions;
    for (std::size_t p = 0; p < m; ++p) ++hits[perm[p]][p];
  } while (std::next_permutation(perm.begin(), perm.end()));
  RationalMatrix out(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < m; ++p) {
      out.at(i, p) = ratio(static_cast<long>(hits[i][p]), static_cast<long>(extensions));
    }
  }
  return out;
}

inline std::vector<std::vector<std::uint64_t>> election_by_counting(const std::vector<RankVector>& ranks) {
  const auto m = ranks.front().size();
  std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(m, 0));
  for (const auto& r : ranks) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) a[i][k] += r[i] < r[k];
    }
  }
  return a;
}

/// Random weak order: each alternative draws a class label, labels are then
/// compacted. Not uniform over weak orders, which is fine for property tests.
inline WeakOrder random_weak_order(std::mt19937_64& rng, std::size_t m) {
  std::vector<std::size_t> label(m);
  for (auto& l : label) l = rng() % m;
  auto sorted = label;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  RankVector rank(m);
  for (std::size_t i = 0; i < m; ++i) {
    rank[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), label[i]) - sorted.begin());
  }
  return order_from_ranks(rank);
}

inline Profile random_profile(std::mt19937_64& rng, std::size_t m, std::size_t entries) {
  std::vector<ProfileEntry> out;
  for (std::size_t e = 0; e < entries; ++e) out.push_back({random_weak_order(rng, m), 1 + rng() % 3});
  return Profile(AlternativeRoster::numbered(m), std::move(out));
}

}  // namespace whipcheck::testing
