#include <doctest.h>

#include <thread>
#include <vector>

#include "fencetile/sequences.hpp"
#include "fencetile/tiling.hpp"

using namespace fencetile;

TEST_CASE("fib is zero below 1 and standard above") {
  CHECK(fib(-3) == 0);
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(6) == 8);
  CHECK(fib_f(0) == 1);
  CHECK(fib_f(4) * fib_f(5) == 40);
  CHECK(fib_f(4) * fib_f(5) == count_board_tilings(9));
}

TEST_CASE("jacobsthal listing") {
  const std::vector<int> expected{0, 1, 1, 3, 5, 11, 21, 43, 85, 171};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(jacobsthal(static_cast<std::int64_t>(n)) == expected[n]);
  CHECK(jacobsthal(-1) == 0);
}

TEST_CASE("board tiling counts") {
  const std::vector<int> expected{1, 1, 1, 2, 4, 6, 9, 15, 25, 40, 64, 104, 169, 273, 441, 714, 1156};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(count_board_tilings(static_cast<std::int64_t>(n)) == expected[n]);
  }
  CHECK(count_board_tilings(-2) == 0);
}

TEST_CASE("n-tiling counts") {
  CHECK(count_n_tilings(0) == 1);
  CHECK(count_n_tilings(3) == 5);
  CHECK(count_n_tilings(8) == 171);
  CHECK(count_n_tilings(9) == 341);
  CHECK(count_n_tilings(-1) == 0);
}

TEST_CASE("general fence family") {
  CHECK(count_board_tilings_general(2, 8) == 25);
  CHECK(count_board_tilings_general(3, 0) == 1);
  // Frozen after comparing with the cell-level enumerator below.
  CHECK(count_board_tilings_general(3, 7) == 12);
  CHECK(enumerate_board_tilings_by_cells(7, 2).size() == 12);
  CHECK_THROWS_AS(count_board_tilings_general(1, 4), std::invalid_argument);
  CHECK(count_board_tilings_general(3, -1) == 0);

  for (int m = 2; m <= 5; ++m) {
    for (int n = 0; n <= 60; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(count_board_tilings_general(m, n) == count_board_tilings_by_cells(n, m - 1));
    }
  }
}

TEST_CASE("golden rectangle numbers") {
  CHECK(golden_rect(0) == 1);
  CHECK(golden_rect(4) == 40);
  CHECK(golden_rect(7) == 714);
  CHECK(golden_rect(7) == count_board_tilings(15));
}

TEST_CASE("squares and golden rectangles split the board counts") {
  for (std::int64_t n = 0; n <= 200; ++n) {
    CHECK(count_board_tilings(2 * n) == fib(n + 1) * fib(n + 1));
    CHECK(count_board_tilings(2 * n + 1) == fib(n + 1) * fib(n + 2));
  }
  // f_100^2 does not fit in 128 bits.
  CHECK(msb(count_board_tilings(200)) >= 128);
}

TEST_CASE("n-tilings are Jacobsthal numbers") {
  for (std::int64_t n = 0; n <= 400; ++n) {
    CHECK(count_n_tilings(n) == jacobsthal(n + 1));
    CHECK(jacobsthal(n + 2) == jacobsthal(n + 1) + 2 * jacobsthal(n));
  }
}

TEST_CASE("counts are non-decreasing") {
  for (std::int64_t n = 1; n <= 300; ++n) {
    CHECK(count_board_tilings(n) >= count_board_tilings(n - 1));
    CHECK(count_n_tilings(n) >= count_n_tilings(n - 1));
  }
}

TEST_CASE("memoized values do not depend on call order or thread") {
  const BigNat far = count_board_tilings(350);
  std::vector<BigNat> seen(4);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    workers.emplace_back([&, t] { seen[t] = count_board_tilings(350 - static_cast<std::int64_t>(t)); });
  }
  for (auto& w : workers) w.join();
  CHECK(seen[0] == far);
  CHECK(seen[1] + count_board_tilings(347) + count_board_tilings(346) == far);
}

TEST_CASE("sequence ids") {
  CHECK(parse_sequence_id("A")->kind == SequenceKind::A);
  CHECK(parse_sequence_id("A3")->m == 3);
  CHECK(parse_sequence_id("Am", 4)->m == 4);
  CHECK_FALSE(parse_sequence_id("A1"));
  CHECK_FALSE(parse_sequence_id("Q"));
  CHECK(sequence_value(*parse_sequence_id("goldenRect"), 7) == 714);
  CHECK(sequence_value(*parse_sequence_id("A3"), 7) == 12);
  CHECK(parse_sequence_id("A3")->name() == "A3");
}

// Three further sequences sit next to A_n: tilings that use only two of the
// three metatiles. Their counts follow the one-step-per-metatile
// recurrences, not the A^(m) products.
TEST_CASE("two-metatile sub-families") {
  auto restricted = [](int n, Metatile banned) {
    int count = 0;
    for_each_board_tiling_by_cells(n, 1, [&](const CellOccupancy& occ) {
      if (to_metatiles(occ).count(banned) == 0) ++count;
    });
    return count;
  };
  auto by_recurrence = [](int n, int a, int b) {
    std::vector<long> t(static_cast<std::size_t>(n) + 1, 0);
    t[0] = 1;
    for (int i = 1; i <= n; ++i) {
      if (i >= a) t[i] += t[i - a];
      if (i >= b) t[i] += t[i - b];
    }
    return t[static_cast<std::size_t>(n)];
  };
  for (int n = 0; n <= 20; ++n) {
    CHECK(restricted(n, Metatile::Bifence) == by_recurrence(n, 1, 3));
    CHECK(restricted(n, Metatile::FilledFence) == by_recurrence(n, 1, 4));
    CHECK(restricted(n, Metatile::FreeSquare) == by_recurrence(n, 3, 4));
  }
  // None of them is an A^(m) sequence for small m.
  for (int m = 3; m <= 5; ++m) CHECK(count_board_tilings_general(m, 12) != by_recurrence(12, 1, 3));
}
