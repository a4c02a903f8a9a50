#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "whipcheck/oracle.hpp"

using namespace whipcheck;
using namespace whipcheck::testing;

namespace {

// Weak orders counted as rank vectors f: {0..m-1} -> {0..m-1} whose image is
// an initial segment {0..k-1}.
std::uint64_t count_by_rank_vectors(std::size_t m) {
  std::uint64_t count = 0;
  std::vector<std::size_t> f(m, 0);
  for (;;) {
    std::vector<bool> used(m, false);
    for (auto v : f) used[v] = true;
    const auto k = static_cast<std::size_t>(std::find(used.begin(), used.end(), false) - used.begin());
    count += std::all_of(used.begin() + static_cast<std::ptrdiff_t>(k), used.end(), [](bool u) { return !u; });
    std::size_t pos = 0;
    while (pos < m && ++f[pos] == m) f[pos++] = 0;
    if (pos == m) break;
  }
  return count;
}

}  // namespace

TEST_CASE("weak order counts match an independent count") {
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto orders = enumerate_weak_orders(m);
    CHECK(orders.size() == count_by_rank_vectors(m));
    CHECK(orders.size() == fubini(m));
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& o : orders) distinct.insert(ranks_from_order(o));
    CHECK(distinct.size() == orders.size());
  }
  CHECK(enumerate_weak_orders(3).size() == 13);
  CHECK(enumerate_weak_orders(4).size() == 75);
  CHECK(enumerate_weak_orders(5).size() == 541);
}

TEST_CASE("m = 2 lists both strict orders then the tie") {
  const auto orders = enumerate_weak_orders(2);
  REQUIRE(orders.size() == 3);
  CHECK(orders[0] == strict({1, 2}));
  CHECK(orders[1] == strict({2, 1}));
  CHECK(orders[2] == weak({{1, 2}}, 2));
}

TEST_CASE("enumeration scope limits") {
  CHECK_THROWS_AS(enumerate_weak_orders(6), ScopeError);
  CHECK_THROWS_AS(enumerate_weak_orders(1), ScopeError);
  CHECK(profile_count({3, 3}) == 2197);
  CHECK(profile_count({5, 2}) == 541 * 541);
  CHECK_THROWS_AS(profile_count({5, 3}), ScopeError);
  CHECK_THROWS_AS(profile_count({3, 0}), ScopeError);
}

TEST_CASE("dominant subsets") {
  CHECK_FALSE(has_proper_dominant_subset(election_matrix(remark())));
  CHECK_FALSE(has_proper_dominant_subset(election_matrix(example2())));
  CHECK(has_proper_dominant_subset(election_matrix(Profile::from_orders({strict({2, 1, 3})}))));
}

TEST_CASE("small scopes verify without counterexamples") {
  const auto tiny = verify_implications({2, 2});
  CHECK(tiny.profiles == 9);
  CHECK(tiny.total_violations() == 0);

  const auto report = verify_implications({3, 3});
  CHECK(report.profiles == 2197);
  CHECK(report.total_violations() == 0);
  CHECK(report.counterexamples.empty());
  std::uint64_t by_class = 0;
  for (auto c : report.outcome_counts) by_class += c;
  CHECK(by_class == report.profiles);
  CHECK(report.none_whipped == report.profiles - report.outcome_counts[3]);
}

TEST_CASE("the cycle profile is whip-free without meeting either condition") {
  const auto report = verify_profiles({remark()});
  CHECK(report.profiles == 1);
  CHECK(report.dual_relation == 0);
  CHECK(report.election_symmetric == 0);
  CHECK(report.none_whipped == 1);
  CHECK(report.total_violations() == 0);
}

TEST_CASE("partitioned verification merges to the same report") {
  const EnumerationScope scope{3, 2};
  const auto whole = verify_range(scope, 0, 169);
  auto pieces = verify_range(scope, 0, 50);
  pieces += verify_range(scope, 50, 120);
  pieces += verify_range(scope, 120, 169);
  pieces.m = whole.m;
  pieces.n = whole.n;
  CHECK(pieces == whole);
  CHECK(verify_implications(scope, 1) == verify_implications(scope, 4));
}

TEST_CASE("counterexamples keep the lowest indices after merging") {
  VerificationReport a, b;
  ProfileAudit bad;
  bad.violations = {Implication::DualGivesNoneWhipped};
  const std::vector<WeakOrder> orders{strict({1, 2})};
  for (std::uint64_t i = 100; i < 120; ++i) b.add(bad, i, orders);
  for (std::uint64_t i = 0; i < 3; ++i) a.add(bad, i, orders);
  a += b;
  REQUIRE(a.counterexamples.size() == VerificationReport::kMaxCounterexamples);
  CHECK(a.counterexamples.front().index == 0);
  CHECK(a.counterexamples[3].index == 100);
  CHECK(a.violations[static_cast<std::size_t>(Implication::DualGivesNoneWhipped)] == 23);
}

TEST_CASE("unranking is a bijection onto the weak orders") {
  for (std::size_t m = 2; m <= 5; ++m) {
    std::set<std::vector<std::size_t>> seen;
    for (std::uint64_t r = 0; r < fubini(m); ++r) seen.insert(ranks_from_order(unrank_weak_order(m, r)));
    CHECK(seen.size() == fubini(m));
  }
  CHECK_THROWS_AS(unrank_weak_order(3, 13), std::out_of_range);
  CHECK(fubini(18) == 3385534663256845323ull);
}

TEST_CASE("bounded draws stay in range and cover it") {
  std::mt19937_64 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[uniform_below(rng, 7)];
  for (int h : hits) CHECK(h > 800);
  CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
}

TEST_CASE("sampled orders are valid") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto w = sample_weak_order(rng, 6);
    CHECK(w.size() == 6);
    const auto s = sample_strict_order(rng, 6);
    CHECK(s.is_strict());
  }
}

TEST_CASE("simulation limits on degenerate cultures") {
  // One criterion, m = 2: only the tied order (1 of 3) is whip-free.
  const auto weak2 = estimate_none_whipped_probability({2, 1, 30000, 9, Culture::UniformWeakOrders});
  CHECK(std::abs(weak2.point - 1.0 / 3.0) < 4 * weak2.standard_error);

  const auto strict3 = estimate_none_whipped_probability({3, 1, 2000, 9, Culture::UniformStrictOrders});
  CHECK(strict3.hits == 0);
  CHECK(strict3.standard_error == 0.0);
}

TEST_CASE("simulation is reproducible and validates its config") {
  const SimulationConfig config{4, 3, 5000, 42, Culture::UniformWeakOrders};
  CHECK(estimate_none_whipped_probability(config) == estimate_none_whipped_probability(config));
  auto other = config;
  other.seed = 43;
  CHECK_FALSE(estimate_none_whipped_probability(config) == estimate_none_whipped_probability(other));

  CHECK_THROWS_AS(estimate_none_whipped_probability({1, 2, 10, 0, Culture::UniformWeakOrders}), ScopeError);
  CHECK_THROWS_AS(estimate_none_whipped_probability({17, 2, 10, 0, Culture::UniformWeakOrders}), ScopeError);
  CHECK_THROWS_AS(estimate_none_whipped_probability({3, 0, 10, 0, Culture::UniformWeakOrders}), ScopeError);
  CHECK_THROWS_AS(estimate_none_whipped_probability({3, 2, 0, 0, Culture::UniformWeakOrders}), ScopeError);
}

TEST_CASE("exhaustive whip-free frequencies") {
  // Frozen from an independent brute force over rank vectors and subsets.
  const auto f32 = exhaustive_none_whipped({3, 2});
  CHECK(f32.total == 169);
  CHECK(f32.hits == 49);
  CHECK(exhaustive_none_whipped({2, 1}).hits == 1);
  CHECK(exhaustive_none_whipped({3, 1}).hits == 1);
  CHECK(exhaustive_none_whipped({2, 2}).hits == 3);
}

TEST_CASE("simulation hits match classifying the same draws as profiles") {
  for (auto culture : {Culture::UniformWeakOrders, Culture::UniformStrictOrders}) {
    const SimulationConfig config{4, 3, 3000, 77, culture};
    std::mt19937_64 rng(config.seed);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      std::vector<WeakOrder> orders;
      for (std::size_t j = 0; j < config.n; ++j) {
        orders.push_back(culture == Culture::UniformWeakOrders ? sample_weak_order(rng, config.m)
                                                               : sample_strict_order(rng, config.m));
      }
      hits += whip_verdict(classify_profile(Profile::from_orders(orders))).none_whipped;
    }
    CHECK(estimate_none_whipped_probability(config).hits == hits);
  }
}
