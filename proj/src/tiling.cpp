#include "fencetile/tiling.hpp"

#include <algorithm>
#include <map>

namespace fencetile {

// ---- CellOccupancy ----

bool CellOccupancy::complete() const {
  return std::none_of(owner_.begin(), owner_.end(), [](int o) { return o == kEmpty; });
}

std::size_t CellOccupancy::fence_count() const {
  return static_cast<std::size_t>(
      std::count_if(tiles_.begin(), tiles_.end(), [](const PlacedTile& p) { return p.tile.is_fence(); }));
}

bool CellOccupancy::can_place(const Tile& tile, std::size_t start) const {
  if (tile.is_fence() && tile.gap < 1) return false;
  const std::size_t last = start + static_cast<std::size_t>(tile.span());
  if (last >= owner_.size()) return false;
  return owner_[start] == kEmpty && owner_[last] == kEmpty;
}

void CellOccupancy::place(const Tile& tile, std::size_t start) {
  if (!can_place(tile, start)) throw std::invalid_argument("tile does not fit on the board");
  const int index = static_cast<int>(tiles_.size());
  tiles_.push_back({tile, start});
  owner_[start] = index;
  owner_[start + static_cast<std::size_t>(tile.span())] = index;
}

void CellOccupancy::remove_last() {
  if (tiles_.empty()) return;
  const PlacedTile& last = tiles_.back();
  owner_[last.start] = kEmpty;
  owner_[last.start + static_cast<std::size_t>(last.tile.span())] = kEmpty;
  tiles_.pop_back();
}

// ---- Metatiles and Tiling ----

std::string_view metatile_symbol(Metatile m) {
  switch (m) {
    case Metatile::FreeSquare: return "S";
    case Metatile::FilledFence: return "FS";
    case Metatile::Bifence: return "FF";
  }
  return "";
}

Tiling::Tiling(std::vector<Metatile> metatiles) {
  metatiles_.reserve(metatiles.size());
  for (Metatile m : metatiles) push_back(m);
}

void Tiling::push_back(Metatile m) {
  metatiles_.push_back(m);
  board_length_ += metatile_length(m);
  tile_count_ += metatile_tile_count(m);
  fence_count_ += metatile_fence_count(m);
}

void Tiling::pop_back() {
  if (metatiles_.empty()) return;
  const Metatile m = metatiles_.back();
  metatiles_.pop_back();
  board_length_ -= metatile_length(m);
  tile_count_ -= metatile_tile_count(m);
  fence_count_ -= metatile_fence_count(m);
}

int Tiling::count(Metatile kind) const {
  return static_cast<int>(std::count(metatiles_.begin(), metatiles_.end(), kind));
}

std::string Tiling::to_string() const {
  std::string out;
  out.reserve(metatiles_.size() * 2);
  for (Metatile m : metatiles_) out += metatile_symbol(m);
  return out;
}

Tiling Tiling::parse(std::string_view symbols) {
  Tiling t;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const char c = symbols[i];
    if (c == 'S') {
      t.push_back(Metatile::FreeSquare);
    } else if (c == 'F') {
      if (i + 1 >= symbols.size()) throw std::invalid_argument("fence symbol without a partner");
      const char next = symbols[++i];
      if (next == 'S') {
        t.push_back(Metatile::FilledFence);
      } else if (next == 'F') {
        t.push_back(Metatile::Bifence);
      } else {
        throw std::invalid_argument("unexpected symbol in tiling string");
      }
    } else {
      throw std::invalid_argument("unexpected symbol in tiling string");
    }
  }
  return t;
}

// ---- enumeration ----

namespace {

void fill_leftmost(CellOccupancy& occ, std::size_t cell, const Tile& fence,
                   const std::function<void(const CellOccupancy&)>& visit) {
  while (cell < occ.length() && occ.owner(cell) != CellOccupancy::kEmpty) ++cell;
  if (cell == occ.length()) {
    visit(occ);
    return;
  }
  occ.place(Tile::square(), cell);
  fill_leftmost(occ, cell + 1, fence, visit);
  occ.remove_last();
  if (occ.can_place(fence, cell)) {
    occ.place(fence, cell);
    fill_leftmost(occ, cell + 1, fence, visit);
    occ.remove_last();
  }
}

void extend_n_tiling(Tiling& prefix, int remaining, const std::function<void(const Tiling&)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (Metatile m : {Metatile::FreeSquare, Metatile::FilledFence, Metatile::Bifence}) {
    if (metatile_tile_count(m) > remaining) continue;
    prefix.push_back(m);
    extend_n_tiling(prefix, remaining - metatile_tile_count(m), visit);
    prefix.pop_back();
  }
}

void check_board_args(int n, int gap) {
  if (n < 0) throw std::invalid_argument("board length must be non-negative");
  if (gap < 1) throw std::invalid_argument("fence gap must be at least 1");
}

}  // namespace

void for_each_board_tiling_by_cells(int n, int gap,
                                    const std::function<void(const CellOccupancy&)>& visit) {
  check_board_args(n, gap);
  CellOccupancy occ(static_cast<std::size_t>(n));
  fill_leftmost(occ, 0, Tile::fence(gap), visit);
}

std::vector<CellOccupancy> enumerate_board_tilings_by_cells(int n, int gap) {
  std::vector<CellOccupancy> out;
  for_each_board_tiling_by_cells(n, gap, [&](const CellOccupancy& occ) { out.push_back(occ); });
  return out;
}

BigNat count_board_tilings_by_cells(int n, int gap) {
  check_board_args(n, gap);
  if (gap > 60) throw std::invalid_argument("fence gap too large for the frontier mask");
  // Bit j of a state marks cell i + j as already covered when cell i is next.
  const std::uint64_t far_post = std::uint64_t{1} << (gap + 1);
  std::map<std::uint64_t, BigNat> states{{0, 1}};
  for (int i = 0; i < n; ++i) {
    std::map<std::uint64_t, BigNat> next;
    for (const auto& [mask, ways] : states) {
      if (mask & 1) {
        next[mask >> 1] += ways;
        continue;
      }
      next[mask >> 1] += ways;
      if (i + gap + 1 < n && !(mask & far_post)) next[(mask | far_post) >> 1] += ways;
    }
    states = std::move(next);
  }
  auto it = states.find(0);
  return it == states.end() ? BigNat(0) : it->second;
}

void for_each_n_tiling(int n, const std::function<void(const Tiling&)>& visit) {
  if (n < 0) throw std::invalid_argument("tile count must be non-negative");
  Tiling prefix;
  extend_n_tiling(prefix, n, visit);
}

std::vector<Tiling> enumerate_n_tilings(int n) {
  std::vector<Tiling> out;
  for_each_n_tiling(n, [&](const Tiling& t) { out.push_back(t); });
  return out;
}

// ---- metatile decomposition ----

Tiling to_metatiles(const CellOccupancy& occ) {
  if (!occ.complete()) throw std::invalid_argument("occupancy is not a complete tiling");
  for (const PlacedTile& p : occ.tiles()) {
    if (p.tile.is_fence() && p.tile.gap != 1) {
      throw std::invalid_argument("metatile decomposition is defined for (1,1)-fences only");
    }
  }
  Tiling out;
  std::size_t segment_start = 0;
  std::size_t reach = 0;
  for (std::size_t cell = 0; cell < occ.length(); ++cell) {
    const PlacedTile& p = occ.tiles()[static_cast<std::size_t>(occ.owner(cell))];
    reach = std::max(reach, p.start + static_cast<std::size_t>(p.tile.span()));
    if (reach != cell) continue;
    switch (cell - segment_start + 1) {
      case 1: out.push_back(Metatile::FreeSquare); break;
      case 3: out.push_back(Metatile::FilledFence); break;
      case 4: out.push_back(Metatile::Bifence); break;
      default: throw std::logic_error("unexpected metatile length");
    }
    segment_start = cell + 1;
  }
  return out;
}

CellOccupancy to_cells(const Tiling& tiling) {
  CellOccupancy occ(static_cast<std::size_t>(tiling.board_length()));
  std::size_t cell = 0;
  for (Metatile m : tiling.metatiles()) {
    switch (m) {
      case Metatile::FreeSquare:
        occ.place(Tile::square(), cell);
        break;
      case Metatile::FilledFence:
        occ.place(Tile::fence(1), cell);
        occ.place(Tile::square(), cell + 1);
        break;
      case Metatile::Bifence:
        occ.place(Tile::fence(1), cell);
        occ.place(Tile::fence(1), cell + 1);
        break;
    }
    cell += static_cast<std::size_t>(metatile_length(m));
  }
  return occ;
}

// ---- classification ----

std::vector<BigNat> classify_board_tilings(int n, const EnumerationLimits& limits) {
  if (n < 0) throw std::invalid_argument("board length must be non-negative");
  if (n > limits.max_board_length) {
    throw InstanceTooLarge("board length " + std::to_string(n) + " exceeds enumeration cap " +
                           std::to_string(limits.max_board_length));
  }
  std::vector<BigNat> histogram(static_cast<std::size_t>(n) + 1);
  for_each_board_tiling_by_cells(n, 1, [&](const CellOccupancy& occ) { ++histogram[occ.fence_count()]; });
  return histogram;
}

std::vector<BigNat> classify_n_tilings(int n, const EnumerationLimits& limits) {
  if (n < 0) throw std::invalid_argument("tile count must be non-negative");
  if (n > limits.max_tile_count) {
    throw InstanceTooLarge("tile count " + std::to_string(n) + " exceeds enumeration cap " +
                           std::to_string(limits.max_tile_count));
  }
  std::vector<BigNat> histogram(static_cast<std::size_t>(n) + 1);
  for_each_n_tiling(n, [&](const Tiling& t) { ++histogram[static_cast<std::size_t>(t.fence_count())]; });
  return histogram;
}

}  // namespace fencetile
