#include "whipcheck/prefmaps.hpp"

#include <stdexcept>
#include <string>

namespace whipcheck {

PreferenceMap preference_map(const WeakOrder& order) {
  PreferenceMap pm(order.size());
  std::size_t better = 0;
  for (const auto& cls : order.classes()) {
    const PositionRange range{better + 1, better + cls.size()};
    for (AltIndex i : cls) pm[i] = range;
    better += cls.size();
  }
  return pm;
}

RationalMatrix ppm(const PreferenceMap& pm) {
  const auto m = pm.size();
  RationalMatrix out(m);
  for (AltIndex i = 0; i < m; ++i) {
    const auto& range = pm[i];
    if (range.first < 1 || range.last > m || range.first > range.last) {
      throw std::invalid_argument("preference map entry " + std::to_string(i) +
                                  " is not a position range within 1.." + std::to_string(m));
    }
    const Rational share = ratio(1, static_cast<long>(range.size()));
    for (std::size_t position = range.first; position <= range.last; ++position) {
      out.at(i, position - 1) = share;
    }
  }
  return out;
}

RationalMatrix sum_matrix(const Profile& profile) {
  RationalMatrix total(profile.alternatives());
  for (const auto& entry : profile.entries()) {
    total.add_scaled(ppm(entry.order), Rational(mpz_class(entry.multiplicity)));
  }
  return total;
}

RationalMatrix mean_matrix(const Profile& profile) {
  auto mean = sum_matrix(profile);
  mean /= Rational(mpz_class(profile.criteria()));
  return mean;
}

Rational mean_rank(const RationalMatrix& mean, AltIndex i) {
  if (i >= mean.dim()) {
    throw std::out_of_range("DimensionMismatch: mean_rank row " + std::to_string(i) + " outside dimension " +
                            std::to_string(mean.dim()));
  }
  Rational rank = 0;
  for (std::size_t col = 0; col < mean.dim(); ++col) rank += (col + 1) * mean.at(i, col);
  return rank;
}

std::vector<Rational> mean_ranks(const RationalMatrix& mean) {
  std::vector<Rational> ranks;
  ranks.reserve(mean.dim());
  for (AltIndex i = 0; i < mean.dim(); ++i) ranks.push_back(mean_rank(mean, i));
  return ranks;
}

}  // namespace whipcheck
