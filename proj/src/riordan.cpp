#include "fencetile/riordan.hpp"

#include <sstream>
#include <stdexcept>

namespace fencetile {

namespace {

std::vector<BigNat> multiply_truncated(const std::vector<BigNat>& a, const std::vector<BigNat>& b, std::size_t order) {
  std::vector<BigNat> out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void trim(Polynomial& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Polynomial parse_polynomial(std::string_view text) {
  Polynomial p;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    std::string token(text.substr(begin, comma == std::string_view::npos ? comma : comma - begin));
    if (!token.empty() && token[0] == '+') token.erase(0, 1);
    if (token.empty()) throw std::invalid_argument("empty coefficient in polynomial");
    const std::size_t sign = token[0] == '-' ? 1 : 0;
    if (sign == token.size() || token.find_first_not_of("0123456789", sign) != std::string::npos) {
      throw std::invalid_argument("malformed coefficient '" + token + "'");
    }
    p.emplace_back(token);
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  return p;
}

std::string format_polynomial(const Polynomial& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << p[i];
  }
  return out.str();
}

}  // namespace

RationalSeries::RationalSeries(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.empty()) numerator_.push_back(0);
  if (denominator_.empty() || denominator_.front() == 0) {
    throw std::invalid_argument("series denominator must have a nonzero constant term");
  }
  trim(numerator_);
  trim(denominator_);
}

std::vector<BigNat> RationalSeries::expand(std::size_t order) const {
  std::vector<BigNat> a(order + 1);
  const BigNat& d0 = denominator_.front();
  for (std::size_t i = 0; i <= order; ++i) {
    BigNat acc = i < numerator_.size() ? numerator_[i] : BigNat(0);
    for (std::size_t j = 1; j < denominator_.size() && j <= i; ++j) acc -= denominator_[j] * a[i - j];
    if (acc % d0 != 0) throw std::domain_error("series has a non-integral coefficient");
    a[i] = acc / d0;
  }
  return a;
}

RationalSeries RationalSeries::parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return RationalSeries(parse_polynomial(text), Polynomial{1});
  return RationalSeries(parse_polynomial(text.substr(0, slash)), parse_polynomial(text.substr(slash + 1)));
}

std::string RationalSeries::to_string() const {
  return format_polynomial(numerator_) + "/" + format_polynomial(denominator_);
}

BigNat riordan_entry(const RationalSeries& p, const RationalSeries& q, std::int64_t n, std::int64_t k) {
  if (q.numerator().front() != 0) throw std::invalid_argument("q must have zero constant term");
  if (n < 0 || k < 0) return 0;
  if (k > n) return 0;
  const auto order = static_cast<std::size_t>(n);
  std::vector<BigNat> acc = p.expand(order);
  const std::vector<BigNat> qs = q.expand(order);
  for (std::int64_t i = 0; i < k; ++i) acc = multiply_truncated(acc, qs, order);
  return acc[order];
}

RiordanArray::RiordanArray(const RationalSeries& p, const RationalSeries& q, std::int64_t rows) : rows_(rows) {
  if (q.numerator().front() != 0) throw std::invalid_argument("q must have zero constant term");
  if (rows < 0) throw std::invalid_argument("row count must be non-negative");
  const auto order = static_cast<std::size_t>(rows);
  const std::vector<BigNat> qs = q.expand(order);
  columns_.push_back(p.expand(order));
  for (std::int64_t k = 1; k <= rows; ++k) columns_.push_back(multiply_truncated(columns_.back(), qs, order));
}

BigNat RiordanArray::at(std::int64_t n, std::int64_t k) const {
  if (n < 0 || k < 0 || k > n || n > rows_) return 0;
  return columns_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

RationalSeries ntile_riordan_p() { return RationalSeries({1}, {1, 0, -1}); }
RationalSeries ntile_riordan_q() { return RationalSeries({0, 1}, {1, -1}); }
RationalSeries board_riordan_p() { return RationalSeries({1}, {1, -1, -1, 1}); }
RationalSeries board_riordan_q() { return RationalSeries({0, 1}, {1, -2, 1}); }

}  // namespace fencetile
