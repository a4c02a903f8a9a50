#include "whipcheck/majority.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace whipcheck {

ElectionMatrix election_matrix(const Profile& profile) {
  const auto m = profile.alternatives();
  ElectionMatrix em(m, profile.criteria());
  for (const auto& entry : profile.entries()) {
    const auto& order = entry.order;
    for (AltIndex i = 0; i < m; ++i) {
      for (AltIndex k = 0; k < m; ++k) {
        if (order.class_of(i) < order.class_of(k)) em.at(i, k) += entry.multiplicity;
      }
    }
  }
  return em;
}

Social MajorityRelation::at(AltIndex i, AltIndex k) const {
  if (i == k) {
    throw ModelError(ModelErrc::SameAlternative,
                     "SameAlternative: majority relation is undefined on the diagonal (" +
                         std::to_string(i) + ")");
  }
  return cells_.at(i * dim_ + k);
}

MajorityRelation majority_relation(const ElectionMatrix& em) {
  MajorityRelation rel(em.dim());
  for (AltIndex i = 0; i < em.dim(); ++i) {
    for (AltIndex k = 0; k < em.dim(); ++k) {
      if (i == k) continue;
      const auto forward = em.at(i, k);
      const auto backward = em.at(k, i);
      rel.set(i, k, forward > backward ? Social::Beats
                    : forward < backward ? Social::LosesTo
                                         : Social::Ties);
    }
  }
  return rel;
}

std::string_view to_string(OutcomeTag tag) {
  switch (tag) {
    case OutcomeTag::AllIndifferent: return "AllIndifferent";
    case OutcomeTag::PureCycle: return "PureCycle";
    case OutcomeTag::MixedConnected: return "MixedConnected";
    case OutcomeTag::Separable: return "Separable";
  }
  return "Unknown";
}

namespace {

// Tarjan's algorithm. Components come out sinks first; because every pair of
// vertices is joined by at least one edge, the condensation is a chain and
// reversing the emission order lists it best first.
std::vector<Stratum> weak_digraph_components(const MajorityRelation& rel) {
  const auto m = rel.dim();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(m, unvisited), low(m, 0);
  std::vector<bool> on_stack(m, false);
  std::vector<AltIndex> stack;
  std::vector<Stratum> components;
  std::size_t counter = 0;

  std::function<void(AltIndex)> visit = [&](AltIndex v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (AltIndex w = 0; w < m; ++w) {
      if (!rel.weakly_beats(v, w)) continue;
      if (index[w] == unvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      Stratum component;
      AltIndex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  };

  for (AltIndex v = 0; v < m; ++v) {
    if (index[v] == unvisited) visit(v);
  }
  std::reverse(components.begin(), components.end());
  return components;
}

}  // namespace

OutcomeClass classify_outcome(const MajorityRelation& rel) {
  OutcomeClass oc;
  oc.strata = weak_digraph_components(rel);
  if (oc.strata.size() > 1) {
    oc.tag = OutcomeTag::Separable;
    return oc;
  }
  bool any_tie = false;
  bool any_strict = false;
  for (AltIndex i = 0; i < rel.dim(); ++i) {
    for (AltIndex k = i + 1; k < rel.dim(); ++k) {
      (rel.at(i, k) == Social::Ties ? any_tie : any_strict) = true;
    }
  }
  if (!any_strict) {
    oc.tag = OutcomeTag::AllIndifferent;
  } else if (!any_tie) {
    oc.tag = OutcomeTag::PureCycle;
  } else {
    oc.tag = OutcomeTag::MixedConnected;
  }
  return oc;
}

WhipVerdict whip_verdict(const OutcomeClass& oc) {
  WhipVerdict verdict;
  verdict.none_whipped = oc.tag != OutcomeTag::Separable;
  if (verdict.none_whipped) {
    for (const auto& stratum : oc.strata) {
      verdict.rewarded.insert(verdict.rewarded.end(), stratum.begin(), stratum.end());
    }
    std::sort(verdict.rewarded.begin(), verdict.rewarded.end());
    verdict.yanked = verdict.rewarded;
  } else {
    verdict.rewarded = oc.strata.front();
    verdict.yanked = oc.strata.back();
  }
  return verdict;
}

OutcomeClass classify_profile(const Profile& profile) {
  return classify_outcome(majority_relation(election_matrix(profile)));
}

}  // namespace whipcheck
