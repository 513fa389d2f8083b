#include <doctest.h>

#include <set>

#include "fencetile/sequences.hpp"
#include "fencetile/tiling.hpp"

using namespace fencetile;

namespace {

std::vector<std::string> board_symbols(int n) {
  std::vector<std::string> out;
  for (const auto& occ : enumerate_board_tilings_by_cells(n, 1)) out.push_back(to_metatiles(occ).to_string());
  return out;
}

std::vector<int> as_ints(const std::vector<BigNat>& v) {
  std::vector<int> out;
  for (const auto& x : v) out.push_back(static_cast<int>(x));
  return out;
}

}  // namespace

TEST_CASE("metatile bookkeeping") {
  CHECK(metatile_length(Metatile::FreeSquare) == 1);
  CHECK(metatile_length(Metatile::FilledFence) == 3);
  CHECK(metatile_length(Metatile::Bifence) == 4);
  CHECK(metatile_tile_count(Metatile::Bifence) == 2);
  CHECK(metatile_fence_count(Metatile::FilledFence) == 1);

  const Tiling t = Tiling::parse("SFSFF");
  CHECK(t.metatiles() == std::vector<Metatile>{Metatile::FreeSquare, Metatile::FilledFence, Metatile::Bifence});
  CHECK(t.board_length() == 8);
  CHECK(t.tile_count() == 5);
  CHECK(t.fence_count() == 3);
  CHECK(t.to_string() == "SFSFF");
  CHECK_THROWS_AS(Tiling::parse("SF"), std::invalid_argument);
  CHECK_THROWS_AS(Tiling::parse("SX"), std::invalid_argument);
}

TEST_CASE("cell enumeration small cases") {
  CHECK(board_symbols(3) == std::vector<std::string>{"SSS", "FS"});
  const auto empty = enumerate_board_tilings_by_cells(0, 1);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].length() == 0);
  CHECK(board_symbols(1) == std::vector<std::string>{"S"});
  // Square is tried before a fence at the leftmost empty cell.
  CHECK(board_symbols(4) == std::vector<std::string>{"SSSS", "SFS", "FSS", "FF"});
  CHECK(enumerate_board_tilings_by_cells(7, 2).size() == 12);
  CHECK_THROWS_AS(enumerate_board_tilings_by_cells(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_board_tilings_by_cells(3, 0), std::invalid_argument);
}

TEST_CASE("every cell is covered once and posts are gap + 1 apart") {
  for (int gap = 1; gap <= 3; ++gap) {
    for_each_board_tiling_by_cells(11, gap, [&](const CellOccupancy& occ) {
      REQUIRE(occ.complete());
      std::vector<int> hits(occ.length(), 0);
      for (const PlacedTile& p : occ.tiles()) {
        ++hits[p.start];
        if (p.tile.is_fence()) {
          CHECK(p.tile.gap == gap);
          ++hits[p.start + static_cast<std::size_t>(gap) + 1];
        }
      }
      for (int h : hits) CHECK(h == 1);
    });
  }
}

TEST_CASE("enumeration agrees with the recurrence") {
  for (int n = 0; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(enumerate_board_tilings_by_cells(n, 1).size() == count_board_tilings(n));
    CHECK(count_board_tilings_by_cells(n, 1) == count_board_tilings(n));
  }
  for (int n = 0; n <= 16; ++n) CHECK(enumerate_n_tilings(n).size() == count_n_tilings(n));
}

TEST_CASE("n-tiling enumeration order") {
  std::vector<std::string> two;
  for (const auto& t : enumerate_n_tilings(2)) two.push_back(t.to_string());
  CHECK(two == std::vector<std::string>{"SS", "FS", "FF"});
  REQUIRE(enumerate_n_tilings(0).size() == 1);
  CHECK(enumerate_n_tilings(0)[0].metatiles().empty());
  CHECK(enumerate_n_tilings(5).size() == 21);
  const auto seven = enumerate_n_tilings(7);
  CHECK(std::is_sorted(seven.begin(), seven.end()));
  CHECK_THROWS_AS(enumerate_n_tilings(-1), std::invalid_argument);
}

TEST_CASE("metatile decomposition") {
  // Figure-style 8-board: free square, filled fence, bifence.
  CellOccupancy occ(8);
  occ.place(Tile::square(), 0);
  occ.place(Tile::fence(1), 1);
  occ.place(Tile::square(), 2);
  occ.place(Tile::fence(1), 4);
  occ.place(Tile::fence(1), 5);
  CHECK(to_metatiles(occ).to_string() == "SFSFF");
  CHECK(to_cells(Tiling::parse("SFSFF")) == occ);

  CellOccupancy single(1);
  single.place(Tile::square(), 0);
  CHECK(to_metatiles(single).to_string() == "S");

  CellOccupancy partial(3);
  partial.place(Tile::square(), 0);
  CHECK_THROWS_AS(to_metatiles(partial), std::invalid_argument);

  CellOccupancy wide(4);
  wide.place(Tile::fence(2), 0);
  wide.place(Tile::square(), 1);
  wide.place(Tile::square(), 2);
  CHECK_THROWS_AS(to_metatiles(wide), std::invalid_argument);

  std::set<std::string> distinct;
  for (const auto& s : board_symbols(7)) distinct.insert(s);
  CHECK(distinct.size() == 15);
}

TEST_CASE("decomposition is injective and round-trips") {
  for (int n = 0; n <= 24; ++n) {
    std::set<Tiling> seen;
    std::size_t total = 0;
    for_each_board_tiling_by_cells(n, 1, [&](const CellOccupancy& occ) {
      const Tiling t = to_metatiles(occ);
      CHECK(t.board_length() == n);
      CHECK(to_cells(t) == occ);
      seen.insert(t);
      ++total;
    });
    CHECK(seen.size() == total);
  }
}

TEST_CASE("bifence, filled fence and free square bookkeeping") {
  for (int n = 0; n <= 18; ++n) {
    for_each_board_tiling_by_cells(n, 1, [&](const CellOccupancy& occ) {
      const Tiling t = to_metatiles(occ);
      const int b = t.count(Metatile::Bifence), f = t.count(Metatile::FilledFence), s = t.count(Metatile::FreeSquare);
      CHECK(t.board_length() == 4 * b + 3 * f + s);
      CHECK(t.fence_count() == 2 * b + f);
      CHECK(static_cast<std::size_t>(t.fence_count()) == occ.fence_count());
      CHECK(t.tile_count() == 2 * b + 2 * f + s);
      CHECK(static_cast<std::size_t>(t.tile_count()) == occ.tiles().size());
    });
  }
}

TEST_CASE("classification histograms") {
  CHECK(as_ints(classify_board_tilings(8)) == std::vector<int>{1, 6, 11, 6, 1, 0, 0, 0, 0});
  CHECK(as_ints(classify_board_tilings(1)) == std::vector<int>{1, 0});
  CHECK(as_ints(classify_board_tilings(12)) == std::vector<int>{1, 10, 37, 62, 46, 12, 1, 0, 0, 0, 0, 0, 0});
  CHECK(as_ints(classify_n_tilings(6)) == std::vector<int>{1, 5, 11, 13, 9, 3, 1});
  CHECK(as_ints(classify_n_tilings(1)) == std::vector<int>{1, 0});
  CHECK(as_ints(classify_n_tilings(4)) == std::vector<int>{1, 3, 4, 2, 1});
}

TEST_CASE("classification caps are explicit") {
  CHECK_THROWS_AS(classify_board_tilings(25), InstanceTooLarge);
  CHECK_THROWS_AS(classify_n_tilings(21), InstanceTooLarge);
  EnumerationLimits small{5, 5};
  CHECK_THROWS_AS(classify_board_tilings(6, small), InstanceTooLarge);
  CHECK_NOTHROW(classify_board_tilings(5, small));
  CHECK_THROWS_AS(classify_board_tilings(-1), std::invalid_argument);
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_board_tilings_by_cells(14, 1) == enumerate_board_tilings_by_cells(14, 1));
  CHECK(enumerate_n_tilings(12) == enumerate_n_tilings(12));
}
