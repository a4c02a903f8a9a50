#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace whipcheck {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// num/den in canonical form. mpq_class's two-argument constructor does not
/// reduce, so prefer this.
inline Rational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational value{mpz_class(num), mpz_class(den)};
  value.canonicalize();
  return value;
}

/// Renders as "p/q", including integers ("3/1").
std::string to_fraction_string(const Rational& value);

/// Accepts "p/q" or "p". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_fraction(std::string_view text);

/// Square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim, Rational(0)) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t dim() const noexcept { return dim_; }

  Rational& at(std::size_t row, std::size_t col) { return cells_.at(row * dim_ + col); }
  const Rational& at(std::size_t row, std::size_t col) const {
    return cells_.at(row * dim_ + col);
  }

  Rational row_sum(std::size_t row) const;
  Rational col_sum(std::size_t col) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  /// Adds `scale * other` entry-wise.
  RationalMatrix& add_scaled(const RationalMatrix& other, const Rational& scale);
  RationalMatrix& operator*=(const Rational& scale);
  RationalMatrix& operator/=(const Rational& scale);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.dim_ == b.dim_ && a.cells_ == b.cells_;
  }

 private:
  void require_same_dim(const RationalMatrix& other) const;

  std::size_t dim_;
  std::vector<Rational> cells_;
};

/// Row-major grid of "p/q" strings.
std::vector<std::vector<std::string>> to_fraction_grid(const RationalMatrix& matrix);
RationalMatrix from_fraction_grid(const std::vector<std::vector<std::string>>& grid);

}  // namespace whipcheck
