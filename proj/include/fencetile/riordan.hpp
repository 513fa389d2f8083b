#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fencetile/bignat.hpp"

namespace fencetile {

// Integer polynomial, coefficient of x^i at index i.
using Polynomial = std::vector<BigNat>;

// Formal power series numerator / denominator. The denominator must have a
// nonzero constant term.
class RationalSeries {
 public:
  // Throws std::invalid_argument when the denominator's constant term is 0.
  RationalSeries(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }

  // Coefficients of x^0..x^order. Division by the denominator's constant
  // term must be exact at every step; a non-integral coefficient throws
  // std::domain_error.
  std::vector<BigNat> expand(std::size_t order) const;

  // "NUM/DEN" with comma-separated coefficients, constant term first,
  // e.g. "0,1/1,-1" for x/(1-x).
  static RationalSeries parse(std::string_view text);
  std::string to_string() const;

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

// Coefficient of x^n in p(x) q(x)^k. q must vanish at 0.
BigNat riordan_entry(const RationalSeries& p, const RationalSeries& q, std::int64_t n, std::int64_t k);

// Rows 0..rows of the (p, q) Riordan array, computed column by column.
class RiordanArray {
 public:
  RiordanArray(const RationalSeries& p, const RationalSeries& q, std::int64_t rows);

  std::int64_t rows() const { return rows_; }
  // 0 outside 0 <= k <= n <= rows.
  BigNat at(std::int64_t n, std::int64_t k) const;

 private:
  std::int64_t rows_;
  // columns_[k][n] for n <= rows.
  std::vector<std::vector<BigNat>> columns_;
};

// (1/(1-x^2), x/(1-x)): entry (n,k) counts n-tilings with k squares.
RationalSeries ntile_riordan_p();
RationalSeries ntile_riordan_q();
// (1/[(1-x)(1-x^2)], x/(1-x)^2): entry (n,k) counts (2n+1)-board tilings
// with 2k+1 squares.
RationalSeries board_riordan_p();
RationalSeries board_riordan_q();

}  // namespace fencetile
