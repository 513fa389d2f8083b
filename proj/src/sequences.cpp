#include "fencetile/sequences.hpp"

#include <stdexcept>

#include "prefix_cache.hpp"

namespace fencetile {

namespace {

using Cache = detail::PrefixCache<BigNat>;

// Index i of the cache holds F_i.
const Cache& fib_cache() {
  static const Cache cache([](std::span<const BigNat> prev, std::size_t i) -> BigNat {
    if (i == 0) return 0;
    if (i == 1) return 1;
    return prev[i - 1] + prev[i - 2];
  });
  return cache;
}

const Cache& jacobsthal_cache() {
  static const Cache cache([](std::span<const BigNat> prev, std::size_t i) -> BigNat {
    if (i == 0) return 0;
    if (i == 1) return 1;
    return prev[i - 1] + 2 * prev[i - 2];
  });
  return cache;
}

const Cache& board_cache() {
  static const Cache cache([](std::span<const BigNat> prev, std::size_t i) -> BigNat {
    auto a = [&](std::int64_t j) -> BigNat { return j < 0 ? BigNat(0) : prev[j]; };
    const auto n = static_cast<std::int64_t>(i);
    BigNat value = a(n - 1) + a(n - 3) + a(n - 4);
    if (n == 0) value += 1;
    return value;
  });
  return cache;
}

const Cache& ntiling_cache() {
  static const Cache cache([](std::span<const BigNat> prev, std::size_t i) -> BigNat {
    auto b = [&](std::int64_t j) -> BigNat { return j < 0 ? BigNat(0) : prev[j]; };
    const auto n = static_cast<std::int64_t>(i);
    BigNat value = b(n - 1) + 2 * b(n - 2);
    if (n == 0) value += 1;
    return value;
  });
  return cache;
}

BigNat lookup(const Cache& cache, std::int64_t n) {
  if (n < 0) return 0;
  return cache.at(static_cast<std::size_t>(n));
}

}  // namespace

BigNat binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigNat result = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    result *= (a - i);
    result /= (i + 1);
  }
  return result;
}

BigNat fib(std::int64_t n) { return n < 1 ? BigNat(0) : lookup(fib_cache(), n); }

BigNat fib_f(std::int64_t n) { return fib(n + 1); }

BigNat jacobsthal(std::int64_t n) { return n < 1 ? BigNat(0) : lookup(jacobsthal_cache(), n); }

BigNat count_board_tilings(std::int64_t n) { return lookup(board_cache(), n); }

BigNat count_n_tilings(std::int64_t n) { return lookup(ntiling_cache(), n); }

BigNat count_board_tilings_general(std::int64_t m, std::int64_t n) {
  if (m < 2) throw std::invalid_argument("fence family requires m >= 2");
  if (n < 0) return 0;
  const std::int64_t q = n / m;
  const std::int64_t r = n % m;
  return boost::multiprecision::pow(fib_f(q), static_cast<unsigned>(m - r)) *
         boost::multiprecision::pow(fib_f(q + 1), static_cast<unsigned>(r));
}

BigNat golden_rect(std::int64_t n) { return n < 0 ? BigNat(0) : fib_f(n) * fib_f(n + 1); }

std::string SequenceId::name() const {
  switch (kind) {
    case SequenceKind::F: return "F";
    case SequenceKind::f: return "f";
    case SequenceKind::J: return "J";
    case SequenceKind::A: return "A";
    case SequenceKind::B: return "B";
    case SequenceKind::Am: return "A" + std::to_string(m);
    case SequenceKind::GoldenRect: return "goldenRect";
  }
  return {};
}

std::optional<SequenceId> parse_sequence_id(std::string_view text, std::int64_t m) {
  if (text == "F") return SequenceId{SequenceKind::F};
  if (text == "f") return SequenceId{SequenceKind::f};
  if (text == "J") return SequenceId{SequenceKind::J};
  if (text == "A") return SequenceId{SequenceKind::A};
  if (text == "B") return SequenceId{SequenceKind::B};
  if (text == "goldenRect") return SequenceId{SequenceKind::GoldenRect};
  if (text == "Am") {
    if (m < 2) return std::nullopt;
    return SequenceId{SequenceKind::Am, m};
  }
  if (text.size() > 1 && text.front() == 'A') {
    std::int64_t value = 0;
    for (char c : text.substr(1)) {
      if (c < '0' || c > '9' || value > 1'000'000) return std::nullopt;
      value = value * 10 + (c - '0');
    }
    if (value < 2) return std::nullopt;
    return SequenceId{SequenceKind::Am, value};
  }
  return std::nullopt;
}

BigNat sequence_value(const SequenceId& id, std::int64_t n) {
  switch (id.kind) {
    case SequenceKind::F: return fib(n);
    case SequenceKind::f: return fib_f(n);
    case SequenceKind::J: return jacobsthal(n);
    case SequenceKind::A: return count_board_tilings(n);
    case SequenceKind::B: return count_n_tilings(n);
    case SequenceKind::Am: return count_board_tilings_general(id.m, n);
    case SequenceKind::GoldenRect: return golden_rect(n);
  }
  return 0;
}

}  // namespace fencetile
