#include <doctest.h>

#include <random>
#include <set>

#include "fencetile/bijections.hpp"
#include "fencetile/sequences.hpp"
#include "fencetile/triangles.hpp"

using namespace fencetile;

namespace {

// All S/D words with exactly n symbols.
std::vector<SDTiling> sd_words(int n) {
  std::vector<SDTiling> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<SDSymbol> s;
    for (int i = 0; i < n; ++i) s.push_back((mask >> (n - 1 - i)) & 1u ? SDSymbol::Domino : SDSymbol::Square);
    out.emplace_back(std::move(s));
  }
  return out;
}

CellOccupancy random_tiling(int n, int gap, std::mt19937& rng) {
  CellOccupancy occ(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < occ.length(); ++c) {
    if (occ.owner(c) != CellOccupancy::kEmpty) continue;
    const Tile f = Tile::fence(gap);
    if (occ.can_place(f, c) && (rng() & 1u)) occ.place(f, c);
    else occ.place(Tile::square(), c);
  }
  return occ;
}

}  // namespace

TEST_CASE("square-domino tilings") {
  CHECK(SDTiling::parse("SSD").length() == 4);
  CHECK(SDTiling::parse("SSD").domino_count() == 1);
  CHECK(SDTiling::parse("").length() == 0);
  CHECK_THROWS_AS(SDTiling::parse("SX"), std::invalid_argument);
  for (int n = 0; n <= 20; ++n) CHECK(enumerate_sd_tilings(n).size() == fib_f(n));
  std::vector<std::string> four;
  for (const auto& t : enumerate_sd_tilings(4)) four.push_back(t.to_string());
  CHECK(four == std::vector<std::string>{"SSSS", "SSD", "SDS", "DSS", "DD"});
  CHECK(SDTuple::parse("SSD|DD").to_string() == "SSD|DD");
  CHECK(SDTuple::parse("|").boards.size() == 2);
}

TEST_CASE("splice examples") {
  CHECK(splice(to_cells(Tiling::parse("FF")), 2).to_string() == "D|D");
  CHECK(splice(to_cells(Tiling::parse("SFSFF")), 2).to_string() == "SSD|DD");
  CHECK(splice(to_cells(Tiling::parse("S")), 2).to_string() == "S|");
  CHECK(splice(to_cells(Tiling::parse("SSS")), 2).to_string() == "SS|S");

  CellOccupancy wide(6);
  wide.place(Tile::fence(2), 0);
  wide.place(Tile::square(), 1);
  wide.place(Tile::square(), 2);
  wide.place(Tile::square(), 4);
  wide.place(Tile::square(), 5);
  CHECK(splice(wide, 3).to_string() == "D|SS|SS");
  CHECK_THROWS_AS(splice(wide, 2), std::invalid_argument);

  CellOccupancy partial(2);
  partial.place(Tile::square(), 0);
  CHECK_THROWS_AS(splice(partial, 2), std::invalid_argument);
}

TEST_CASE("unsplice rejects mismatched boards") {
  CHECK_THROWS_AS(unsplice(SDTuple::parse("SSS|S"), 2), std::invalid_argument);
  CHECK_THROWS_AS(unsplice(SDTuple::parse("S|SS"), 2), std::invalid_argument);
  CHECK_THROWS_AS(unsplice(SDTuple::parse("S|S"), 3), std::invalid_argument);
  CHECK(unsplice(SDTuple::parse("SSD|DD"), 2) == to_cells(Tiling::parse("SFSFF")));
  CHECK(unsplice(SDTuple::parse("|"), 2).length() == 0);
}

TEST_CASE("splice is a bijection onto the tuple set") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 0; n <= 20; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      std::set<SDTuple> image;
      std::size_t total = 0;
      for_each_board_tiling_by_cells(n, m - 1, [&](const CellOccupancy& occ) {
        const SDTuple t = splice(occ, m);
        CHECK(unsplice(t, m) == occ);
        image.insert(t);
        ++total;
      });
      const auto tuples = enumerate_sd_tuples(n, m);
      CHECK(image.size() == total);
      CHECK(image == std::set<SDTuple>(tuples.begin(), tuples.end()));
      CHECK(total == count_board_tilings_general(m, n));
    }
  }
}

TEST_CASE("splice of the nine-board") {
  const auto all = enumerate_board_tilings_by_cells(9, 1);
  REQUIRE(all.size() == 40);
  for (const auto& occ : all) {
    const SDTuple t = splice(occ, 2);
    REQUIRE(t.boards.size() == 2);
    CHECK(t.boards[0].length() == 5);
    CHECK(t.boards[1].length() == 4);
  }
}

TEST_CASE("random splice round trips") {
  std::mt19937 rng(20240611u);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int q = static_cast<int>(rng() % 9);
    const int r = static_cast<int>(rng() % static_cast<unsigned>(m));
    const CellOccupancy occ = random_tiling(m * q + r, m - 1, rng);
    CHECK(unsplice(splice(occ, m), m) == occ);
  }
}

TEST_CASE("domino pairing examples") {
  const auto a = domino_pair_map(SDTiling::parse("DDDSS"));
  CHECK(a.branch == DominoPairImage::Branch::NTiling);
  CHECK(a.tiling.to_string() == "FFFSS");
  const auto b = domino_pair_map(SDTiling::parse("SD"));
  CHECK(b.branch == DominoPairImage::Branch::Reduced);
  CHECK(b.tiling.to_string() == "S");
  const auto c = domino_pair_map(SDTiling::parse("DDD"));
  CHECK(c.branch == DominoPairImage::Branch::Reduced);
  CHECK(c.tiling.to_string() == "FF");
  CHECK(domino_pair_map(SDTiling{}).tiling.metatiles().empty());

  int ntile = 0, reduced = 0;
  for (const auto& w : sd_words(5)) {
    if (w.domino_count() != 2) continue;
    (domino_pair_map(w).branch == DominoPairImage::Branch::NTiling ? ntile : reduced)++;
  }
  CHECK(ntile == 7);
  CHECK(reduced == 3);
}

TEST_CASE("domino pairing splits binomial coefficients") {
  for (int n = 0; n <= 12; ++n) {
    std::vector<std::set<Tiling>> full(n + 1), cut(n + 1);
    std::vector<std::size_t> words(n + 1, 0);
    for (const auto& w : sd_words(n)) {
      const int k = w.domino_count();
      const DominoPairImage img = domino_pair_map(w);
      CHECK(domino_pair_unmap(img) == w);
      if (img.branch == DominoPairImage::Branch::NTiling) {
        CHECK(img.tiling.tile_count() == n);
        CHECK(img.tiling.fence_count() == k);
        full[k].insert(img.tiling);
      } else {
        CHECK(img.tiling.tile_count() == n - 1);
        CHECK(img.tiling.fence_count() == k - 1);
        cut[k].insert(img.tiling);
      }
      ++words[k];
    }
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(BigNat(words[k]) == binomial(n, k));
      CHECK(BigNat(full[k].size()) == tri_ntile(n, k));
      CHECK(BigNat(cut[k].size()) == tri_ntile(n - 1, k - 1));
    }
  }
}
