#include "whipcheck/model.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace whipcheck {

const char* to_string(ModelErrc code) {
  switch (code) {
    case ModelErrc::EmptyClass: return "EmptyClass";
    case ModelErrc::DuplicateAlternative: return "DuplicateAlternative";
    case ModelErrc::MissingAlternative: return "MissingAlternative";
    case ModelErrc::IndexOutOfRange: return "IndexOutOfRange";
    case ModelErrc::SameAlternative: return "SameAlternative";
    case ModelErrc::TooFewAlternatives: return "TooFewAlternatives";
    case ModelErrc::DuplicateLabel: return "DuplicateLabel";
    case ModelErrc::EmptyLabel: return "EmptyLabel";
    case ModelErrc::RosterMismatch: return "RosterMismatch";
    case ModelErrc::ZeroMultiplicity: return "ZeroMultiplicity";
    case ModelErrc::EmptyProfile: return "EmptyProfile";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void fail(ModelErrc code, const std::string& detail) {
  throw ModelError(code, std::string(to_string(code)) + ": " + detail);
}

}  // namespace

AlternativeRoster::AlternativeRoster(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.size() < 2) {
    fail(ModelErrc::TooFewAlternatives,
         "need at least 2 alternatives, got " + std::to_string(names_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) fail(ModelErrc::EmptyLabel, "alternative label is empty");
    if (!seen.insert(name).second) {
      fail(ModelErrc::DuplicateLabel, "label '" + name + "' appears twice");
    }
  }
}

AlternativeRoster AlternativeRoster::numbered(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  return AlternativeRoster(std::move(names));
}

WeakOrder make_weak_order(std::vector<WeakOrder::Class> classes, std::size_t m) {
  if (m < 2) {
    fail(ModelErrc::TooFewAlternatives, "m must be at least 2, got " + std::to_string(m));
  }
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  WeakOrder order;
  order.class_of_.assign(m, unset);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto& cls = classes[c];
    if (cls.empty()) fail(ModelErrc::EmptyClass, "class " + std::to_string(c) + " is empty");
    for (AltIndex i : cls) {
      if (i >= m) {
        fail(ModelErrc::IndexOutOfRange, "index " + std::to_string(i) + " in class " +
                                             std::to_string(c) + " is not below m=" +
                                             std::to_string(m));
      }
      if (order.class_of_[i] != unset) {
        fail(ModelErrc::DuplicateAlternative, "index " + std::to_string(i) + " appears in class " +
                                                  std::to_string(order.class_of_[i]) +
                                                  " and class " + std::to_string(c));
      }
      order.class_of_[i] = c;
    }
    std::sort(cls.begin(), cls.end());
  }
  for (AltIndex i = 0; i < m; ++i) {
    if (order.class_of_[i] == unset) {
      fail(ModelErrc::MissingAlternative, "index " + std::to_string(i) + " is not ranked");
    }
  }
  order.classes_ = std::move(classes);
  return order;
}

WeakOrder make_strict_order(const std::vector<AltIndex>& ranking) {
  std::vector<WeakOrder::Class> classes;
  classes.reserve(ranking.size());
  for (AltIndex i : ranking) classes.push_back({i});
  return make_weak_order(std::move(classes), ranking.size());
}

WeakOrder WeakOrder::reversed() const {
  std::vector<Class> flipped(classes_.rbegin(), classes_.rend());
  return make_weak_order(std::move(flipped), size());
}

Pairwise pairwise(const WeakOrder& order, AltIndex i, AltIndex k) {
  const auto m = order.size();
  if (i >= m || k >= m) {
    fail(ModelErrc::IndexOutOfRange, "pair (" + std::to_string(i) + "," + std::to_string(k) +
                                         ") outside m=" + std::to_string(m));
  }
  if (i == k) fail(ModelErrc::SameAlternative, "index " + std::to_string(i) + " compared with itself");
  const auto ci = order.class_of(i);
  const auto ck = order.class_of(k);
  if (ci < ck) return Pairwise::Prefers;
  if (ci > ck) return Pairwise::Dispreferred;
  return Pairwise::Indifferent;
}

Profile::Profile(AlternativeRoster roster, std::vector<ProfileEntry> entries)
    : roster_(std::move(roster)), entries_(std::move(entries)) {
  if (entries_.empty()) fail(ModelErrc::EmptyProfile, "profile has no criteria");
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    const auto& entry = entries_[e];
    if (entry.order.size() != roster_.size()) {
      fail(ModelErrc::RosterMismatch, "entry " + std::to_string(e) + " ranks " +
                                          std::to_string(entry.order.size()) +
                                          " alternatives, roster has " +
                                          std::to_string(roster_.size()));
    }
    if (entry.multiplicity == 0) {
      fail(ModelErrc::ZeroMultiplicity, "entry " + std::to_string(e) + " has multiplicity 0");
    }
    criteria_ += entry.multiplicity;
  }
}

Profile Profile::from_orders(const std::vector<WeakOrder>& orders) {
  if (orders.empty()) fail(ModelErrc::EmptyProfile, "profile has no criteria");
  std::vector<ProfileEntry> entries;
  entries.reserve(orders.size());
  for (const auto& order : orders) entries.push_back({order, 1});
  return Profile(AlternativeRoster::numbered(orders.front().size()), std::move(entries));
}

Profile Profile::reversed() const {
  std::vector<ProfileEntry> flipped;
  flipped.reserve(entries_.size());
  for (const auto& entry : entries_) flipped.push_back({entry.order.reversed(), entry.multiplicity});
  return Profile(roster_, std::move(flipped));
}

}  // namespace whipcheck
