#pragma once

// Brute-force verification over every small profile, and Monte Carlo
// estimation of how often nobody is whipped.
//
// Random draws use std::mt19937_64 (the 64-bit Mersenne Twister, whose output
// sequence is fixed by the C++ standard) together with the bounded-integer and
// unranking routines below, so a seed reproduces bit-identical results on any
// conforming standard library. std::uniform_int_distribution is avoided
// because its algorithm is implementation-defined.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "whipcheck/majority.hpp"
#include "whipcheck/model.hpp"

namespace whipcheck {

class ScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxEnumeratedAlternatives = 5;
inline constexpr std::uint64_t kMaxEnumeratedProfiles = 10'000'000;
inline constexpr std::size_t kMaxSimulatedAlternatives = 16;

/// Number of weak orders (ordered set partitions) of m items. Valid up to m = 18.
std::uint64_t fubini(std::size_t m);

/// Every weak order on m alternatives, each exactly once, in a fixed order.
/// Throws ScopeError unless 2 <= m <= 5.
std::vector<WeakOrder> enumerate_weak_orders(std::size_t m);

/// True if some proper non-empty subset A has every member strictly beating
/// every non-member. Checks all 2^m subsets.
bool has_proper_dominant_subset(const ElectionMatrix& em);

struct EnumerationScope {
  std::size_t m = 3;
  std::size_t n = 2;
};

/// W(m)^n. Throws ScopeError when m is outside 2..5, n is 0, or the count
/// exceeds kMaxEnumeratedProfiles.
std::uint64_t profile_count(const EnumerationScope& scope);

enum class Implication {
  SymmetryGivesAllIndifferent,  // (a) election symmetry => AllIndifferent
  DualGivesNoneWhipped,         // (b) dual relation => none whipped
  DualGivesCentralRanks,        // (c) dual relation => every mean rank = (m+1)/2
  NoneWhippedIffNoDominantSet,  // (d) none whipped <=> no proper dominant subset
};
inline constexpr std::size_t kImplicationCount = 4;

std::string_view to_string(Implication implication);

/// Everything the oracle checks about one profile.
struct ProfileAudit {
  OutcomeTag outcome = OutcomeTag::AllIndifferent;
  bool none_whipped = true;
  bool election_symmetric = false;
  bool mean_uniform = false;
  bool dual_relation = false;
  bool borda_equal = false;
  bool central_ranks = false;
  bool dominant_subset = false;
  std::vector<Implication> violations;
};

ProfileAudit audit_profile(const Profile& profile);

struct Counterexample {
  std::uint64_t index = 0;  // position in the enumeration (mixed radix, criterion 0 most significant)
  Implication implication = Implication::DualGivesNoneWhipped;
  std::vector<WeakOrder> orders;
};

/// Tallies over a set of profiles. Partial reports over disjoint ranges merge
/// by addition; the merged result does not depend on how the range was split.
struct VerificationReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t profiles = 0;
  std::array<std::uint64_t, 4> outcome_counts{};  // indexed by OutcomeTag
  std::uint64_t none_whipped = 0;
  std::uint64_t election_symmetric = 0;
  std::uint64_t mean_uniform = 0;
  std::uint64_t dual_relation = 0;
  std::uint64_t borda_equal = 0;
  std::array<std::uint64_t, kImplicationCount> violations{};
  /// Lowest-index counterexamples, at most kMaxCounterexamples.
  std::vector<Counterexample> counterexamples;

  static constexpr std::size_t kMaxCounterexamples = 16;

  std::uint64_t total_violations() const noexcept;
  void add(const ProfileAudit& audit, std::uint64_t index, const std::vector<WeakOrder>& orders);
  VerificationReport& operator+=(const VerificationReport& other);
};

bool operator==(const Counterexample& a, const Counterexample& b);
bool operator==(const VerificationReport& a, const VerificationReport& b);

/// Profile number `index` of the scope: digit j (base W(m), most significant
/// first) selects criterion j's order from `orders`.
std::vector<WeakOrder> profile_at(const std::vector<WeakOrder>& orders, std::size_t n,
                                  std::uint64_t index);

/// Audits profiles [begin, end) of the scope.
VerificationReport verify_range(const EnumerationScope& scope, std::uint64_t begin,
                                std::uint64_t end);

/// Audits every ordered n-tuple of weak orders on m alternatives, split across
/// `threads` workers (0 picks the hardware concurrency).
VerificationReport verify_implications(const EnumerationScope& scope, unsigned threads = 1);

/// Audits explicitly given profiles as one report (indices are list positions).
VerificationReport verify_profiles(const std::vector<Profile>& profiles);

enum class Culture { UniformWeakOrders, UniformStrictOrders };

std::string_view to_string(Culture culture);

struct SimulationConfig {
  std::size_t m = 3;
  std::size_t n = 2;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  Culture culture = Culture::UniformWeakOrders;
};

struct Estimate {
  double point = 0.0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

/// Uniform integer in [0, bound) by rejection; bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform over all fubini(m) weak orders.
WeakOrder sample_weak_order(std::mt19937_64& rng, std::size_t m);
/// Uniform over all m! strict orders.
WeakOrder sample_strict_order(std::mt19937_64& rng, std::size_t m);

/// Weak order number `rank` in [0, fubini(m)); a bijection onto all weak orders.
WeakOrder unrank_weak_order(std::size_t m, std::uint64_t rank);

/// Fraction of `trials` independently drawn profiles where nobody is whipped,
/// with binomial standard error sqrt(p(1-p)/trials). Throws ScopeError on
/// m outside 2..16, n == 0 or trials == 0.
Estimate estimate_none_whipped_probability(const SimulationConfig& config);

/// Exact none-whipped count over all W(m)^n ordered profiles.
struct ExactFrequency {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
};
ExactFrequency exhaustive_none_whipped(const EnumerationScope& scope);

}  // namespace whipcheck
