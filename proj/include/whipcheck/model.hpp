#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace whipcheck {

/// Index of an alternative within its roster, 0-based.
using AltIndex = std::size_t;

enum class ModelErrc {
  EmptyClass,
  DuplicateAlternative,
  MissingAlternative,
  IndexOutOfRange,
  SameAlternative,
  TooFewAlternatives,
  DuplicateLabel,
  EmptyLabel,
  RosterMismatch,
  ZeroMultiplicity,
  EmptyProfile,
};

const char* to_string(ModelErrc code);

class ModelError : public std::invalid_argument {
 public:
  ModelError(ModelErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  ModelErrc code() const noexcept { return code_; }

 private:
  ModelErrc code_;
};

/// Ordered, duplicate-free list of alternative labels (m >= 2).
class AlternativeRoster {
 public:
  explicit AlternativeRoster(std::vector<std::string> names);

  /// Roster x1..xm.
  static AlternativeRoster numbered(std::size_t m);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(AltIndex i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const AlternativeRoster&, const AlternativeRoster&) = default;

 private:
  std::vector<std::string> names_;
};

enum class Pairwise { Prefers, Indifferent, Dispreferred };

/// One criterion's ranking: indifference classes, most preferred first.
/// Each class is stored sorted ascending.
class WeakOrder {
 public:
  using Class = std::vector<AltIndex>;

  const std::vector<Class>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return classes_.size(); }

  /// 0-based position of i's class in the order.
  std::size_t class_of(AltIndex i) const { return class_of_.at(i); }

  /// Same classes, last first.
  WeakOrder reversed() const;

  bool is_strict() const noexcept { return classes_.size() == class_of_.size(); }

  friend bool operator==(const WeakOrder& a, const WeakOrder& b) {
    return a.classes_ == b.classes_;
  }

 private:
  friend WeakOrder make_weak_order(std::vector<Class> classes, std::size_t m);
  WeakOrder() = default;

  std::vector<Class> classes_;
  std::vector<std::size_t> class_of_;
};

/// Validates and builds a weak order over m alternatives.
/// Throws ModelError (EmptyClass, DuplicateAlternative, MissingAlternative,
/// IndexOutOfRange, TooFewAlternatives).
WeakOrder make_weak_order(std::vector<WeakOrder::Class> classes, std::size_t m);

/// Strict order from a permutation, best first.
WeakOrder make_strict_order(const std::vector<AltIndex>& ranking);

Pairwise pairwise(const WeakOrder& order, AltIndex i, AltIndex k);

/// A criterion ranking together with how many identical criteria share it.
struct ProfileEntry {
  WeakOrder order;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// Multiset of weak orders over one roster. Entries keep their input order.
class Profile {
 public:
  Profile(AlternativeRoster roster, std::vector<ProfileEntry> entries);
  /// Convenience: roster x1..xm, one criterion per order.
  static Profile from_orders(const std::vector<WeakOrder>& orders);

  const AlternativeRoster& roster() const noexcept { return roster_; }
  const std::vector<ProfileEntry>& entries() const noexcept { return entries_; }
  std::size_t alternatives() const noexcept { return roster_.size(); }
  /// Total criterion count n (sum of multiplicities).
  std::uint64_t criteria() const noexcept { return criteria_; }

  /// Every criterion ranking reversed.
  Profile reversed() const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  AlternativeRoster roster_;
  std::vector<ProfileEntry> entries_;
  std::uint64_t criteria_ = 0;
};

}  // namespace whipcheck
