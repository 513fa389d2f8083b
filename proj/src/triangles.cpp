#include "fencetile/triangles.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "prefix_cache.hpp"

namespace fencetile {

namespace {

using Row = std::vector<BigNat>;
using RowCache = detail::PrefixCache<Row>;

BigNat entry(std::span<const Row> rows, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const RowCache& ntile_rows() {
  static const RowCache cache([](std::span<const Row> rows, std::size_t i) {
    const auto n = static_cast<std::int64_t>(i);
    Row row(i + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
      BigNat v = entry(rows, n - 1, k) + entry(rows, n - 2, k - 1) + entry(rows, n - 2, k - 2);
      if (n == 0 && k == 0) v += 1;
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
    return row;
  });
  return cache;
}

const RowCache& board_rows() {
  static const RowCache cache([](std::span<const Row> rows, std::size_t i) {
    const auto n = static_cast<std::int64_t>(i);
    Row row(i + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
      BigNat v = entry(rows, n - 1, k) + entry(rows, n - 3, k - 1) + entry(rows, n - 4, k - 2);
      if (n == 0 && k == 0) v += 1;
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
    return row;
  });
  return cache;
}

BigNat lookup(const RowCache& cache, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return cache.with(static_cast<std::size_t>(n), [k](const Row& row) { return row[static_cast<std::size_t>(k)]; });
}

}  // namespace

BigNat tri_ntile(std::int64_t n, std::int64_t k) { return lookup(ntile_rows(), n, k); }

BigNat tri_board(std::int64_t n, std::int64_t k) { return lookup(board_rows(), n, k); }

BigNat tri_ntile_closed_form(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  const std::int64_t b_min = std::max<std::int64_t>(0, ceil_div(2 * k - n, 2));
  const std::int64_t b_max = floor_div(k, 2);
  BigNat sum = 0;
  for (std::int64_t b = b_min; b <= b_max; ++b) sum += binomial(n - k + b, k - b) * binomial(k - b, b);
  return sum;
}

BigNat tri_board_closed_form(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  const std::int64_t b_min = std::max<std::int64_t>(0, ceil_div(3 * k - n, 2));
  const std::int64_t b_max = floor_div(k, 2);
  BigNat sum = 0;
  for (std::int64_t b = b_min; b <= b_max; ++b) sum += binomial(n - 2 * k + b, k - b) * binomial(k - b, b);
  return sum;
}

BigNat seq_c(std::int64_t r, std::int64_t n) {
  if (r < 0 || n < 0) return 0;
  BigNat sum = 0;
  for (std::int64_t i = n; i >= 0; i -= 2) sum += binomial(i + r, 2 * r);
  return sum;
}

BigNat seq_d(std::int64_t r, std::int64_t n) {
  if (r < 0 || n < 0) return 0;
  if (r == 0) return n % 2 == 0 ? 1 : 0;
  BigNat sum = 0;
  for (std::int64_t i = n; i >= 0; i -= 2) sum += binomial(i - 1, r - 1);
  return sum;
}

BigNat square_array_a(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) return 0;
  if (n == 0) return 1;
  BigNat sum = 0;
  for (std::int64_t r = 0; r < m; ++r) sum += binomial(n - 1 + 2 * r, n - 1);
  return sum;
}

BigNat tri_half(std::int64_t n, std::int64_t k) {
  if (n < 0) return 0;
  return tri_board(2 * n, k);
}

BigNat board_entry_binomial_split(std::int64_t n, std::int64_t k, RowParity parity) {
  if (n < 0 || k < 0) return 0;
  const bool odd = parity == RowParity::Odd;
  const std::int64_t m = std::min(odd ? floor_div(n + 1, 2) : floor_div(n, 2), k);
  const std::int64_t first = odd ? n + 1 : n;
  BigNat sum = 0;
  for (std::int64_t j = k - m; j <= m; ++j) sum += binomial(first - j, j) * binomial(n - (k - j), k - j);
  return sum;
}

BigNat triangle_entry(TriangleId id, std::int64_t n, std::int64_t k) {
  switch (id) {
    case TriangleId::Board: return tri_board(n, k);
    case TriangleId::NTile: return tri_ntile(n, k);
    case TriangleId::Half: return tri_half(n, k);
  }
  return 0;
}

std::string format_triangle_text(TriangleId id, std::int64_t rows) {
  std::ostringstream out;
  for (std::int64_t n = 0; n <= rows; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      if (k) out << ' ';
      out << triangle_entry(id, n, k);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_triangle_csv(TriangleId id, std::int64_t rows) {
  std::ostringstream out;
  out << "n,k,value\n";
  for (std::int64_t n = 0; n <= rows; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) out << n << ',' << k << ',' << triangle_entry(id, n, k) << '\n';
  }
  return out.str();
}

}  // namespace fencetile
