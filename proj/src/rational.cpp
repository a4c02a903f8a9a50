#include "whipcheck/rational.hpp"

#include <cctype>

namespace whipcheck {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
      den_text.front() == '-' || den_text.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational value(parse_integer(num_text), den);
  value.canonicalize();
  return value;
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : dim_(rows.size()) {
  cells_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("RationalMatrix: rows must form a square");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

Rational RationalMatrix::row_sum(std::size_t row) const {
  Rational total = 0;
  for (std::size_t c = 0; c < dim_; ++c) total += at(row, c);
  return total;
}

Rational RationalMatrix::col_sum(std::size_t col) const {
  Rational total = 0;
  for (std::size_t r = 0; r < dim_; ++r) total += at(r, col);
  return total;
}

void RationalMatrix::require_same_dim(const RationalMatrix& other) const {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("RationalMatrix: dimension mismatch " + std::to_string(dim_) +
                                " vs " + std::to_string(other.dim_));
  }
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  require_same_dim(other);
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
  return *this;
}

RationalMatrix& RationalMatrix::add_scaled(const RationalMatrix& other, const Rational& scale) {
  require_same_dim(other);
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += scale * other.cells_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scale) {
  for (auto& cell : cells_) cell *= scale;
  return *this;
}

RationalMatrix& RationalMatrix::operator/=(const Rational& scale) {
  if (scale == 0) throw std::domain_error("RationalMatrix: division by zero");
  for (auto& cell : cells_) cell /= scale;
  return *this;
}

std::vector<std::vector<std::string>> to_fraction_grid(const RationalMatrix& matrix) {
  std::vector<std::vector<std::string>> grid(matrix.dim());
  for (std::size_t r = 0; r < matrix.dim(); ++r) {
    grid[r].reserve(matrix.dim());
    for (std::size_t c = 0; c < matrix.dim(); ++c) grid[r].push_back(to_fraction_string(matrix.at(r, c)));
  }
  return grid;
}

RationalMatrix from_fraction_grid(const std::vector<std::vector<std::string>>& grid) {
  RationalMatrix matrix(grid.size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (grid[r].size() != grid.size()) {
      throw std::invalid_argument("fraction grid row " + std::to_string(r) + " is not square");
    }
    for (std::size_t c = 0; c < grid.size(); ++c) matrix.at(r, c) = parse_fraction(grid[r][c]);
  }
  return matrix;
}

}  // namespace whipcheck
