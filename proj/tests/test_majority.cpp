#include "doctest.h"
#include "fixtures.hpp"
#include "whipcheck/majority.hpp"

using namespace whipcheck;
using namespace whipcheck::testing;

TEST_CASE("election matrix of the cycle profile") {
  const auto em = election_matrix(remark());
  CHECK(em.at(0, 1) == 3);
  CHECK(em.at(1, 0) == 2);
  CHECK(em.at(1, 2) == 4);
  CHECK(em.at(2, 1) == 1);
  CHECK(em.at(0, 2) == 2);
  CHECK(em.at(2, 0) == 3);
  for (AltIndex i = 0; i < 3; ++i) CHECK(em.at(i, i) == 0);
}

TEST_CASE("ties count for neither side") {
  const auto em = election_matrix(Profile::from_orders({weak({{1, 2}}, 2)}));
  CHECK(em.at(0, 1) == 0);
  CHECK(em.at(1, 0) == 0);
  CHECK(em.ties(0, 1) == 1);
}

TEST_CASE("election matrix with ties") {
  const auto em = election_matrix(example1());
  CHECK(em.at(0, 1) == 1);
  CHECK(em.at(1, 0) == 1);
  const auto profile = example1();
  std::vector<RankVector> ranks;
  for (const auto& e : profile.entries()) ranks.push_back(ranks_from_order(e.order));
  const auto expected = election_by_counting(ranks);
  for (AltIndex i = 0; i < 4; ++i) {
    for (AltIndex k = 0; k < 4; ++k) CHECK(em.at(i, k) == expected[i][k]);
  }
}

TEST_CASE("majority relation") {
  const auto cycle = majority_relation(election_matrix(remark()));
  CHECK(cycle.at(0, 1) == Social::Beats);
  CHECK(cycle.at(1, 2) == Social::Beats);
  CHECK(cycle.at(2, 0) == Social::Beats);
  CHECK(cycle.at(1, 0) == Social::LosesTo);
  CHECK_THROWS_AS(cycle.at(1, 1), ModelError);

  ElectionMatrix symmetric(3, 4);
  symmetric.at(0, 1) = symmetric.at(1, 0) = 2;
  symmetric.at(0, 2) = symmetric.at(2, 0) = 1;
  const auto ties = majority_relation(symmetric);
  for (AltIndex i = 0; i < 3; ++i) {
    for (AltIndex k = 0; k < 3; ++k) {
      if (i != k) CHECK(ties.at(i, k) == Social::Ties);
    }
  }

  const auto mixed = majority_relation(election_matrix(example2()));
  CHECK(mixed.at(0, 1) == Social::Ties);
  CHECK(mixed.at(0, 2) == Social::Ties);
  CHECK(mixed.at(0, 3) == Social::Ties);
  CHECK(mixed.at(1, 2) == Social::Beats);
  CHECK(mixed.at(2, 3) == Social::Beats);
  CHECK(mixed.at(3, 1) == Social::Beats);
}

TEST_CASE("outcome classification") {
  const auto ex1 = classify_profile(example1());
  CHECK(ex1.tag == OutcomeTag::AllIndifferent);
  CHECK(ex1.strata == std::vector<Stratum>{{0, 1, 2, 3}});

  CHECK(classify_profile(remark()).tag == OutcomeTag::PureCycle);
  CHECK(classify_profile(example2()).tag == OutcomeTag::MixedConnected);

  const auto chain = classify_profile(Profile::from_orders({strict({1, 2, 3})}));
  CHECK(chain.tag == OutcomeTag::Separable);
  CHECK(chain.strata == std::vector<Stratum>{{0}, {1}, {2}});
}

TEST_CASE("strata are listed best first") {
  // x3 > {x1 ~ x2} > x4 under unanimity.
  const auto oc = classify_profile(Profile::from_orders({weak({{3}, {1, 2}, {4}}, 4)}));
  CHECK(oc.tag == OutcomeTag::Separable);
  CHECK(oc.strata == std::vector<Stratum>{{2}, {0, 1}, {3}});

  // Cycle on x2..x4 sitting below x1.
  const auto top_over_cycle = classify_profile(Profile::from_orders({
      strict({1, 2, 3, 4}),
      strict({1, 3, 4, 2}),
      strict({1, 4, 2, 3}),
  }));
  CHECK(top_over_cycle.strata == std::vector<Stratum>{{0}, {1, 2, 3}});
}

TEST_CASE("whip verdicts") {
  CHECK(whip_verdict(classify_profile(example2())).none_whipped);
  const auto cycle = whip_verdict(classify_profile(remark()));
  CHECK(cycle.none_whipped);
  CHECK(cycle.rewarded == Stratum{0, 1, 2});
  CHECK(cycle.yanked == Stratum{0, 1, 2});

  const auto chain = whip_verdict(classify_profile(Profile::from_orders({strict({1, 2, 3})})));
  CHECK_FALSE(chain.none_whipped);
  CHECK(chain.rewarded == Stratum{0});
  CHECK(chain.yanked == Stratum{2});
}

TEST_CASE("reversing every criterion keeps the verdict and swaps the ends") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const auto profile = random_profile(rng, 2 + rng() % 4, 1 + rng() % 4);
    const auto forward = whip_verdict(classify_profile(profile));
    const auto backward = whip_verdict(classify_profile(profile.reversed()));
    CHECK(forward.none_whipped == backward.none_whipped);
    CHECK(forward.rewarded == backward.yanked);
    CHECK(forward.yanked == backward.rewarded);
  }
}

TEST_CASE("election matrix pair counts never exceed n") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto profile = random_profile(rng, 2 + rng() % 4, 1 + rng() % 5);
    const auto em = election_matrix(profile);
    for (AltIndex i = 0; i < em.dim(); ++i) {
      for (AltIndex k = 0; k < em.dim(); ++k) {
        if (i == k) continue;
        CHECK(em.at(i, k) + em.at(k, i) <= profile.criteria());
        bool any_tie = false;
        for (const auto& e : profile.entries()) any_tie |= e.order.class_of(i) == e.order.class_of(k);
        CHECK((em.at(i, k) + em.at(k, i) == profile.criteria()) == !any_tie);
      }
    }
  }
}
