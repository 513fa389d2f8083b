#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fencetile/bignat.hpp"

// Named integer sequences. Every function is total: indices below the
// seed region return 0. Values are memoized internally behind a mutex, so
// the functions are safe to call concurrently and behave as pure functions.
namespace fencetile {

// F_n with F_1 = F_2 = 1 and F_{n<1} = 0.
BigNat fib(std::int64_t n);

// f_n = F_{n+1}: number of square-domino tilings of an n-board.
BigNat fib_f(std::int64_t n);

// J_n = [n = 1] + J_{n-1} + 2 J_{n-2}, J_{n<1} = 0.
BigNat jacobsthal(std::int64_t n);

// A_n = [n = 0] + A_{n-1} + A_{n-3} + A_{n-4}: tilings of an n-board by
// squares and (1,1)-fences.
BigNat count_board_tilings(std::int64_t n);

// B_n = [n = 0] + B_{n-1} + 2 B_{n-2}: tilings using exactly n tiles.
BigNat count_n_tilings(std::int64_t n);

// A^(m)_N for squares and (1,m-1)-fences, via N = mq + r and
// A^(m)_N = f_q^(m-r) f_{q+1}^r. 0 for negative n; throws
// std::invalid_argument for m < 2.
BigNat count_board_tilings_general(std::int64_t m, std::int64_t n);

// Golden rectangle number f_n f_{n+1}.
BigNat golden_rect(std::int64_t n);

enum class SequenceKind { F, f, J, A, B, Am, GoldenRect };

struct SequenceId {
  SequenceKind kind = SequenceKind::A;
  // Fence-family parameter; meaningful only for SequenceKind::Am.
  std::int64_t m = 2;

  std::string name() const;
};

// Accepts "F", "f", "J", "A", "B", "goldenRect", "Am" (with m supplied
// separately) or "A<m>" such as "A3". Returns nullopt on unknown names.
std::optional<SequenceId> parse_sequence_id(std::string_view text, std::int64_t m = 2);

// Dispatches to the accessor named by id. Negative indices yield 0 except
// for Am, whose domain starts at 0 (and which throws below it).
BigNat sequence_value(const SequenceId& id, std::int64_t n);

}  // namespace fencetile
