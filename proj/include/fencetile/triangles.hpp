#pragma once

#include <cstdint>
#include <string>

#include "fencetile/bignat.hpp"

// Pascal-like triangles of fence-square tilings and their relatives.
// All accessors are total and return 0 outside the triangular support.
namespace fencetile {

// <n,k>_B: n-tilings with exactly k fences, by
// <n,k>_B = [n=k=0] + <n-1,k>_B + <n-2,k-1>_B + <n-2,k-2>_B.
BigNat tri_ntile(std::int64_t n, std::int64_t k);

// <n,k>: tilings of an n-board with exactly k fences, by
// <n,k> = [n=k=0] + <n-1,k> + <n-3,k-1> + <n-4,k-2>.
BigNat tri_board(std::int64_t n, std::int64_t k);

// Bifence-count sums: sum over b of C(n-k+b, k-b) C(k-b, b) for
// b in [max(0, ceil(k - n/2)), floor(k/2)].
BigNat tri_ntile_closed_form(std::int64_t n, std::int64_t k);
// Sum over b of C(n-2k+b, k-b) C(k-b, b) for
// b in [max(0, ceil((3k - n)/2)), floor(k/2)].
BigNat tri_board_closed_form(std::int64_t n, std::int64_t k);

// C^(r)_n: (2n+1)-board tilings with 2r+1 squares, from
// C^(r)_n = C^(r)_{n-2} + C(n+r, 2r).
BigNat seq_c(std::int64_t r, std::int64_t n);

// D^(r)_n: n-tilings with r squares, from D^(r)_n = D^(r)_{n-2} + C(n-1, r-1)
// and D^(0)_n = [n even].
BigNat seq_d(std::int64_t r, std::int64_t n);

// a(n,m) = sum_{r<m} C(n-1+2r, n-1), with a(0,m) = 1.
BigNat square_array_a(std::int64_t n, std::int64_t m);

// <n,k>_{1/2}: n-board tilings by half-squares and k (1/2,1/2)-fences,
// evaluated as <2n,k>.
BigNat tri_half(std::int64_t n, std::int64_t k);

enum class RowParity { Odd, Even };

// <2n+1,k> (Odd) or <2n,k> (Even) as a sum of products of two binomials,
// one factor per board of the spliced pair.
BigNat board_entry_binomial_split(std::int64_t n, std::int64_t k, RowParity parity);

enum class TriangleId { Board, NTile, Half };

BigNat triangle_entry(TriangleId id, std::int64_t n, std::int64_t k);

// Rows 0..rows, one per line, entries 0..n separated by single spaces.
std::string format_triangle_text(TriangleId id, std::int64_t rows);
// Same entries as CSV with header "n,k,value".
std::string format_triangle_csv(TriangleId id, std::int64_t rows);

}  // namespace fencetile
