#include "whipcheck/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "whipcheck/conditions.hpp"
#include "whipcheck/prefmaps.hpp"

namespace whipcheck {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

void require_enumerable_m(std::size_t m) {
  if (m < 2) throw ScopeError("ScopeTooSmall: need m >= 2, got " + std::to_string(m));
  if (m > kMaxEnumeratedAlternatives) {
    throw ScopeError("ScopeTooLarge: enumeration supports m <= " +
                     std::to_string(kMaxEnumeratedAlternatives) + ", got " + std::to_string(m));
  }
}

void enumerate_into(std::vector<AltIndex> remaining, std::vector<WeakOrder::Class>& prefix,
                    std::size_t m, std::vector<WeakOrder>& out) {
  if (remaining.empty()) {
    out.push_back(make_weak_order(prefix, m));
    return;
  }
  const auto r = remaining.size();
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    WeakOrder::Class head;
    std::vector<AltIndex> rest;
    for (std::size_t b = 0; b < r; ++b) {
      ((mask >> b) & 1u ? head : rest).push_back(remaining[b]);
    }
    prefix.push_back(std::move(head));
    enumerate_into(std::move(rest), prefix, m, out);
    prefix.pop_back();
  }
}

}  // namespace

std::uint64_t fubini(std::size_t m) {
  static const auto table = [] {
    std::array<std::uint64_t, 19> t{};
    t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
      for (std::size_t k = 1; k <= i; ++k) t[i] += binomial(i, k) * t[i - k];
    }
    return t;
  }();
  if (m >= table.size()) throw ScopeError("fubini: m=" + std::to_string(m) + " overflows 64 bits");
  return table[m];
}

std::vector<WeakOrder> enumerate_weak_orders(std::size_t m) {
  require_enumerable_m(m);
  std::vector<AltIndex> all(m);
  std::iota(all.begin(), all.end(), AltIndex{0});
  std::vector<WeakOrder> out;
  out.reserve(fubini(m));
  std::vector<WeakOrder::Class> prefix;
  enumerate_into(std::move(all), prefix, m, out);
  return out;
}

bool has_proper_dominant_subset(const ElectionMatrix& em) {
  const auto m = em.dim();
  if (m > 20) throw ScopeError("has_proper_dominant_subset: m=" + std::to_string(m) + " too large");
  const std::uint32_t full = (1u << m) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    bool dominant = true;
    for (AltIndex a = 0; a < m && dominant; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (AltIndex b = 0; b < m; ++b) {
        if ((mask >> b) & 1u) continue;
        if (em.at(a, b) <= em.at(b, a)) {
          dominant = false;
          break;
        }
      }
    }
    if (dominant) return true;
  }
  return false;
}

std::uint64_t profile_count(const EnumerationScope& scope) {
  require_enumerable_m(scope.m);
  if (scope.n == 0) throw ScopeError("ScopeTooSmall: need n >= 1");
  const auto base = fubini(scope.m);
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < scope.n; ++j) {
    if (total > kMaxEnumeratedProfiles / base) {
      throw ScopeError("ScopeTooLarge: " + std::to_string(base) + "^" + std::to_string(scope.n) +
                       " profiles exceeds the limit of " + std::to_string(kMaxEnumeratedProfiles));
    }
    total *= base;
  }
  return total;
}

std::string_view to_string(Implication implication) {
  switch (implication) {
    case Implication::SymmetryGivesAllIndifferent: return "election_symmetric=>AllIndifferent";
    case Implication::DualGivesNoneWhipped: return "dual_relation=>none_whipped";
    case Implication::DualGivesCentralRanks: return "dual_relation=>mean_ranks_central";
    case Implication::NoneWhippedIffNoDominantSet: return "none_whipped<=>no_dominant_subset";
  }
  return "unknown";
}

ProfileAudit audit_profile(const Profile& profile) {
  ProfileAudit audit;
  const auto em = election_matrix(profile);
  const auto oc = classify_outcome(majority_relation(em));
  const auto mean = mean_matrix(profile);
  const auto m = profile.alternatives();

  audit.outcome = oc.tag;
  audit.none_whipped = whip_verdict(oc).none_whipped;
  audit.election_symmetric = check_election_symmetry(em).holds;
  audit.mean_uniform = check_mean_uniform(mean).holds;
  audit.dual_relation = check_dual_relation(mean).holds;
  audit.borda_equal = check_borda_equal(mean).holds;
  const Rational centre = ratio(static_cast<long>(m) + 1, 2);
  const auto ranks = mean_ranks(mean);
  audit.central_ranks =
      std::all_of(ranks.begin(), ranks.end(), [&](const Rational& r) { return r == centre; });
  audit.dominant_subset = has_proper_dominant_subset(em);

  if (audit.election_symmetric && audit.outcome != OutcomeTag::AllIndifferent) {
    audit.violations.push_back(Implication::SymmetryGivesAllIndifferent);
  }
  if (audit.dual_relation && !audit.none_whipped) {
    audit.violations.push_back(Implication::DualGivesNoneWhipped);
  }
  if (audit.dual_relation && !audit.central_ranks) {
    audit.violations.push_back(Implication::DualGivesCentralRanks);
  }
  if (audit.none_whipped == audit.dominant_subset) {
    audit.violations.push_back(Implication::NoneWhippedIffNoDominantSet);
  }
  return audit;
}

std::uint64_t VerificationReport::total_violations() const noexcept {
  return std::accumulate(violations.begin(), violations.end(), std::uint64_t{0});
}

void VerificationReport::add(const ProfileAudit& audit, std::uint64_t index,
                             const std::vector<WeakOrder>& orders) {
  ++profiles;
  ++outcome_counts[static_cast<std::size_t>(audit.outcome)];
  none_whipped += audit.none_whipped;
  election_symmetric += audit.election_symmetric;
  mean_uniform += audit.mean_uniform;
  dual_relation += audit.dual_relation;
  borda_equal += audit.borda_equal;
  for (auto implication : audit.violations) {
    ++violations[static_cast<std::size_t>(implication)];
    if (counterexamples.size() < kMaxCounterexamples) {
      counterexamples.push_back({index, implication, orders});
    }
  }
}

VerificationReport& VerificationReport::operator+=(const VerificationReport& other) {
  profiles += other.profiles;
  for (std::size_t t = 0; t < outcome_counts.size(); ++t) outcome_counts[t] += other.outcome_counts[t];
  none_whipped += other.none_whipped;
  election_symmetric += other.election_symmetric;
  mean_uniform += other.mean_uniform;
  dual_relation += other.dual_relation;
  borda_equal += other.borda_equal;
  for (std::size_t v = 0; v < violations.size(); ++v) violations[v] += other.violations[v];
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
  std::stable_sort(counterexamples.begin(), counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) { return a.index < b.index; });
  if (counterexamples.size() > kMaxCounterexamples) counterexamples.resize(kMaxCounterexamples);
  return *this;
}

bool operator==(const Counterexample& a, const Counterexample& b) {
  return a.index == b.index && a.implication == b.implication && a.orders == b.orders;
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
  return a.m == b.m && a.n == b.n && a.profiles == b.profiles &&
         a.outcome_counts == b.outcome_counts && a.none_whipped == b.none_whipped &&
         a.election_symmetric == b.election_symmetric && a.mean_uniform == b.mean_uniform &&
         a.dual_relation == b.dual_relation && a.borda_equal == b.borda_equal &&
         a.violations == b.violations && a.counterexamples == b.counterexamples;
}

std::vector<WeakOrder> profile_at(const std::vector<WeakOrder>& orders, std::size_t n,
                                  std::uint64_t index) {
  std::vector<WeakOrder> picked(n, orders.front());
  for (std::size_t j = n; j-- > 0;) {
    picked[j] = orders[index % orders.size()];
    index /= orders.size();
  }
  return picked;
}

VerificationReport verify_range(const EnumerationScope& scope, std::uint64_t begin,
                                std::uint64_t end) {
  const auto total = profile_count(scope);
  end = std::min(end, total);
  const auto orders = enumerate_weak_orders(scope.m);
  VerificationReport report;
  report.m = scope.m;
  report.n = scope.n;
  for (auto index = begin; index < end; ++index) {
    const auto picked = profile_at(orders, scope.n, index);
    report.add(audit_profile(Profile::from_orders(picked)), index, picked);
  }
  return report;
}

VerificationReport verify_implications(const EnumerationScope& scope, unsigned threads) {
  const auto total = profile_count(scope);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<VerificationReport> parts(threads);
  std::vector<std::thread> workers;
  const auto chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const auto begin = std::min(total, t * chunk);
    const auto end = std::min(total, begin + chunk);
    workers.emplace_back([&, t, begin, end] { parts[t] = verify_range(scope, begin, end); });
  }
  for (auto& worker : workers) worker.join();

  VerificationReport merged;
  merged.m = scope.m;
  merged.n = scope.n;
  for (const auto& part : parts) merged += part;
  return merged;
}

VerificationReport verify_profiles(const std::vector<Profile>& profiles) {
  VerificationReport report;
  if (!profiles.empty()) {
    report.m = profiles.front().alternatives();
    report.n = static_cast<std::size_t>(profiles.front().criteria());
  }
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    std::vector<WeakOrder> orders;
    for (const auto& entry : profiles[p].entries()) {
      orders.insert(orders.end(), entry.multiplicity, entry.order);
    }
    report.add(audit_profile(profiles[p]), p, orders);
  }
  return report;
}

std::string_view to_string(Culture culture) {
  switch (culture) {
    case Culture::UniformWeakOrders: return "weak";
    case Culture::UniformStrictOrders: return "strict";
  }
  return "unknown";
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  // Values below `threshold` would bias the modulus.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw >= threshold) return draw % bound;
  }
}

WeakOrder unrank_weak_order(std::size_t m, std::uint64_t rank) {
  if (rank >= fubini(m)) {
    throw std::out_of_range("unrank_weak_order: rank " + std::to_string(rank) + " >= " +
                            std::to_string(fubini(m)));
  }
  std::vector<AltIndex> remaining(m);
  std::iota(remaining.begin(), remaining.end(), AltIndex{0});
  std::vector<WeakOrder::Class> classes;
  while (!remaining.empty()) {
    const auto r = remaining.size();
    for (std::size_t k = 1; k <= r; ++k) {
      const auto subsets = binomial(r, k);
      const auto block = subsets * fubini(r - k);
      if (rank >= block) {
        rank -= block;
        continue;
      }
      auto subset_rank = rank % subsets;
      rank /= subsets;
      // Lexicographic unranking of a k-subset of `remaining`.
      WeakOrder::Class head;
      std::vector<AltIndex> rest;
      std::size_t need = k;
      for (std::size_t pos = 0; pos < r; ++pos) {
        const auto with = need == 0 ? 0 : binomial(r - pos - 1, need - 1);
        if (need > 0 && subset_rank < with) {
          head.push_back(remaining[pos]);
          --need;
        } else {
          subset_rank -= need > 0 ? with : 0;
          rest.push_back(remaining[pos]);
        }
      }
      classes.push_back(std::move(head));
      remaining = std::move(rest);
      break;
    }
  }
  return make_weak_order(std::move(classes), m);
}

WeakOrder sample_weak_order(std::mt19937_64& rng, std::size_t m) {
  return unrank_weak_order(m, uniform_below(rng, fubini(m)));
}

WeakOrder sample_strict_order(std::mt19937_64& rng, std::size_t m) {
  std::vector<AltIndex> ranking(m);
  std::iota(ranking.begin(), ranking.end(), AltIndex{0});
  for (std::size_t i = m; i-- > 1;) std::swap(ranking[i], ranking[uniform_below(rng, i + 1)]);
  return make_strict_order(ranking);
}

Estimate estimate_none_whipped_probability(const SimulationConfig& config) {
  if (config.m < 2 || config.m > kMaxSimulatedAlternatives) {
    throw ScopeError("simulation supports 2 <= m <= " + std::to_string(kMaxSimulatedAlternatives) +
                     ", got " + std::to_string(config.m));
  }
  if (config.n == 0) throw ScopeError("simulation needs n >= 1");
  if (config.trials == 0) throw ScopeError("simulation needs trials >= 1");

  std::mt19937_64 rng(config.seed);
  Estimate estimate;
  estimate.trials = config.trials;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    // Same counts as election_matrix() on the equivalent profile.
    ElectionMatrix em(config.m, config.n);
    for (std::size_t j = 0; j < config.n; ++j) {
      const auto order = config.culture == Culture::UniformWeakOrders
                             ? sample_weak_order(rng, config.m)
                             : sample_strict_order(rng, config.m);
      for (AltIndex i = 0; i < config.m; ++i) {
        for (AltIndex k = 0; k < config.m; ++k) em.at(i, k) += order.class_of(i) < order.class_of(k);
      }
    }
    estimate.hits += whip_verdict(classify_outcome(majority_relation(em))).none_whipped;
  }
  const double p = static_cast<double>(estimate.hits) / static_cast<double>(estimate.trials);
  estimate.point = p;
  estimate.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(estimate.trials));
  return estimate;
}

ExactFrequency exhaustive_none_whipped(const EnumerationScope& scope) {
  ExactFrequency freq;
  freq.total = profile_count(scope);
  const auto orders = enumerate_weak_orders(scope.m);
  for (std::uint64_t index = 0; index < freq.total; ++index) {
    const auto profile = Profile::from_orders(profile_at(orders, scope.n, index));
    freq.hits += whip_verdict(classify_profile(profile)).none_whipped;
  }
  return freq;
}

}  // namespace whipcheck
