#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fencetile/bignat.hpp"

namespace fencetile {

// A square, or a fence whose two unit posts sit `gap` cells apart
// (covering cells i and i + gap + 1). Fence(1) is the (1,1)-fence.
struct Tile {
  enum class Kind { Square, Fence };

  Kind kind = Kind::Square;
  int gap = 0;

  static constexpr Tile square() { return {Kind::Square, 0}; }
  static constexpr Tile fence(int gap) { return {Kind::Fence, gap}; }

  constexpr bool is_fence() const { return kind == Kind::Fence; }
  // Offset of the last covered cell relative to the first.
  constexpr int span() const { return is_fence() ? gap + 1 : 0; }

  friend constexpr bool operator==(const Tile&, const Tile&) = default;
  friend constexpr auto operator<=>(const Tile&, const Tile&) = default;
};

struct PlacedTile {
  Tile tile;
  std::size_t start = 0;

  friend constexpr bool operator==(const PlacedTile&, const PlacedTile&) = default;
  friend constexpr auto operator<=>(const PlacedTile&, const PlacedTile&) = default;
};

// Per-cell view of a (possibly partial) board tiling. Tiles are kept in
// placement order, which for complete tilings produced here is the order of
// their first cell.
class CellOccupancy {
 public:
  static constexpr int kEmpty = -1;

  CellOccupancy() = default;
  explicit CellOccupancy(std::size_t length) : owner_(length, kEmpty) {}

  std::size_t length() const { return owner_.size(); }
  const std::vector<PlacedTile>& tiles() const { return tiles_; }
  // Index into tiles() of the tile covering `cell`, or kEmpty.
  int owner(std::size_t cell) const { return owner_.at(cell); }
  bool complete() const;
  std::size_t fence_count() const;

  bool can_place(const Tile& tile, std::size_t start) const;
  // Throws std::invalid_argument if the tile does not fit.
  void place(const Tile& tile, std::size_t start);
  void remove_last();

  friend bool operator==(const CellOccupancy& a, const CellOccupancy& b) {
    return a.tiles_ == b.tiles_ && a.owner_ == b.owner_;
  }
  friend auto operator<=>(const CellOccupancy& a, const CellOccupancy& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.tiles_ <=> b.tiles_;
  }

 private:
  std::vector<PlacedTile> tiles_;
  std::vector<int> owner_;
};

enum class Metatile { FreeSquare, FilledFence, Bifence };

constexpr int metatile_length(Metatile m) {
  switch (m) {
    case Metatile::FreeSquare: return 1;
    case Metatile::FilledFence: return 3;
    case Metatile::Bifence: return 4;
  }
  return 0;
}

constexpr int metatile_tile_count(Metatile m) { return m == Metatile::FreeSquare ? 1 : 2; }

constexpr int metatile_fence_count(Metatile m) {
  switch (m) {
    case Metatile::FreeSquare: return 0;
    case Metatile::FilledFence: return 1;
    case Metatile::Bifence: return 2;
  }
  return 0;
}

// "S", "FS" or "FF".
std::string_view metatile_symbol(Metatile m);

// A tiling of squares and (1,1)-fences as its metatile sequence; this is
// the canonical identity of a tiling.
class Tiling {
 public:
  Tiling() = default;
  explicit Tiling(std::vector<Metatile> metatiles);

  const std::vector<Metatile>& metatiles() const { return metatiles_; }
  int board_length() const { return board_length_; }
  int tile_count() const { return tile_count_; }
  int fence_count() const { return fence_count_; }
  int count(Metatile kind) const;

  // Symbol string such as "SFSFF"; empty for the empty tiling.
  std::string to_string() const;
  // Inverse of to_string; throws std::invalid_argument on malformed input.
  static Tiling parse(std::string_view symbols);

  void push_back(Metatile m);
  void pop_back();

  friend bool operator==(const Tiling& a, const Tiling& b) { return a.metatiles_ == b.metatiles_; }
  friend auto operator<=>(const Tiling& a, const Tiling& b) { return a.metatiles_ <=> b.metatiles_; }

 private:
  std::vector<Metatile> metatiles_;
  int board_length_ = 0;
  int tile_count_ = 0;
  int fence_count_ = 0;
};

// Raised when an exhaustive enumeration is asked for an instance above its
// configured cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  int max_board_length = 24;
  int max_tile_count = 20;
};

// Depth-first fill of the leftmost empty cell, trying a square before a
// fence. The callback sees each complete tiling in that canonical order.
void for_each_board_tiling_by_cells(int n, int gap,
                                    const std::function<void(const CellOccupancy&)>& visit);
std::vector<CellOccupancy> enumerate_board_tilings_by_cells(int n, int gap);

// Cell-level count of the same tilings using a frontier-mask transfer over
// the next gap + 2 cells. Makes no metatile assumption; usable far beyond
// the sizes the list enumerator can materialize.
BigNat count_board_tilings_by_cells(int n, int gap);

// All metatile sequences with exactly n tiles, lexicographic in S < FS < FF.
void for_each_n_tiling(int n, const std::function<void(const Tiling&)>& visit);
std::vector<Tiling> enumerate_n_tilings(int n);

// Unique metatile decomposition of a complete (1,1)-fence tiling.
// Throws std::invalid_argument if occ is incomplete or uses another gap.
Tiling to_metatiles(const CellOccupancy& occ);
// Expands a metatile sequence back into its per-cell form.
CellOccupancy to_cells(const Tiling& tiling);

// Histograms over k = 0..n of the number of tilings with k fences, from
// exhaustive enumeration. Throw InstanceTooLarge above the caps.
std::vector<BigNat> classify_board_tilings(int n, const EnumerationLimits& limits = {});
std::vector<BigNat> classify_n_tilings(int n, const EnumerationLimits& limits = {});

}  // namespace fencetile
