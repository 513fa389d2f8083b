#include "fencetile/bijections.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace fencetile {

int SDTiling::length() const {
  int total = 0;
  for (SDSymbol s : symbols_) total += s == SDSymbol::Square ? 1 : 2;
  return total;
}

int SDTiling::domino_count() const {
  return static_cast<int>(std::count(symbols_.begin(), symbols_.end(), SDSymbol::Domino));
}

std::string SDTiling::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (SDSymbol s : symbols_) out += s == SDSymbol::Square ? 'S' : 'D';
  return out;
}

SDTiling SDTiling::parse(std::string_view text) {
  std::vector<SDSymbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c == 'S') {
      symbols.push_back(SDSymbol::Square);
    } else if (c == 'D') {
      symbols.push_back(SDSymbol::Domino);
    } else {
      throw std::invalid_argument("square-domino strings use only S and D");
    }
  }
  return SDTiling(std::move(symbols));
}

std::string SDTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < boards.size(); ++i) {
    if (i) out += '|';
    out += boards[i].to_string();
  }
  return out;
}

SDTuple SDTuple::parse(std::string_view text) {
  SDTuple tuple;
  std::size_t begin = 0;
  while (true) {
    const std::size_t bar = text.find('|', begin);
    tuple.boards.push_back(SDTiling::parse(text.substr(begin, bar == std::string_view::npos ? bar : bar - begin)));
    if (bar == std::string_view::npos) break;
    begin = bar + 1;
  }
  return tuple;
}

namespace {

void extend_sd(std::vector<SDSymbol>& prefix, int remaining, std::vector<SDTiling>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  prefix.push_back(SDSymbol::Square);
  extend_sd(prefix, remaining - 1, out);
  prefix.pop_back();
  if (remaining >= 2) {
    prefix.push_back(SDSymbol::Domino);
    extend_sd(prefix, remaining - 2, out);
    prefix.pop_back();
  }
}

void check_modulus(int m) {
  if (m < 2) throw std::invalid_argument("splice modulus must be at least 2");
}

int board_length_for(int total, int m, int j) { return total / m + (j < total % m ? 1 : 0); }

}  // namespace

std::vector<SDTiling> enumerate_sd_tilings(int n) {
  if (n < 0) throw std::invalid_argument("board length must be non-negative");
  std::vector<SDTiling> out;
  std::vector<SDSymbol> prefix;
  extend_sd(prefix, n, out);
  return out;
}

std::vector<SDTuple> enumerate_sd_tuples(int board_length, int m) {
  check_modulus(m);
  if (board_length < 0) throw std::invalid_argument("board length must be non-negative");
  std::vector<SDTuple> tuples{SDTuple{}};
  for (int j = 0; j < m; ++j) {
    const auto choices = enumerate_sd_tilings(board_length_for(board_length, m, j));
    std::vector<SDTuple> next;
    next.reserve(tuples.size() * choices.size());
    for (const SDTuple& t : tuples) {
      for (const SDTiling& c : choices) {
        SDTuple extended = t;
        extended.boards.push_back(c);
        next.push_back(std::move(extended));
      }
    }
    tuples = std::move(next);
  }
  return tuples;
}

SDTuple splice(const CellOccupancy& occ, int m) {
  check_modulus(m);
  if (!occ.complete()) throw std::invalid_argument("occupancy is not a complete tiling");
  const int total = static_cast<int>(occ.length());
  // Per board, the symbol starting at each position (nullopt for the second
  // half of a domino).
  std::vector<std::vector<std::optional<SDSymbol>>> slots(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    slots[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(board_length_for(total, m, j)));
  }
  for (const PlacedTile& p : occ.tiles()) {
    const auto board = p.start % static_cast<std::size_t>(m);
    const auto pos = p.start / static_cast<std::size_t>(m);
    if (p.tile.is_fence()) {
      if (p.tile.gap != m - 1) throw std::invalid_argument("fence gap does not match the splice modulus");
      slots[board][pos] = SDSymbol::Domino;
    } else {
      slots[board][pos] = SDSymbol::Square;
    }
  }
  SDTuple tuple;
  for (const auto& board : slots) {
    std::vector<SDSymbol> symbols;
    for (const auto& slot : board) {
      if (slot) symbols.push_back(*slot);
    }
    tuple.boards.emplace_back(std::move(symbols));
  }
  return tuple;
}

CellOccupancy unsplice(const SDTuple& tuple, int m) {
  check_modulus(m);
  if (tuple.boards.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("tuple size does not match the splice modulus");
  }
  int total = 0;
  for (const SDTiling& b : tuple.boards) total += b.length();
  for (int j = 0; j < m; ++j) {
    if (tuple.boards[static_cast<std::size_t>(j)].length() != board_length_for(total, m, j)) {
      throw std::invalid_argument("board lengths are inconsistent with a spliced tiling");
    }
  }
  // Collect tiles with their first cell, then place them in cell order so the
  // result matches the canonical enumeration order.
  std::vector<PlacedTile> placed;
  for (int j = 0; j < m; ++j) {
    std::size_t pos = 0;
    for (SDSymbol s : tuple.boards[static_cast<std::size_t>(j)].symbols()) {
      const std::size_t cell = pos * static_cast<std::size_t>(m) + static_cast<std::size_t>(j);
      if (s == SDSymbol::Square) {
        placed.push_back({Tile::square(), cell});
        pos += 1;
      } else {
        placed.push_back({Tile::fence(m - 1), cell});
        pos += 2;
      }
    }
  }
  std::sort(placed.begin(), placed.end(),
            [](const PlacedTile& a, const PlacedTile& b) { return a.start < b.start; });
  CellOccupancy occ(static_cast<std::size_t>(total));
  for (const PlacedTile& p : placed) occ.place(p.tile, p.start);
  return occ;
}

DominoPairImage domino_pair_map(const SDTiling& sd) {
  DominoPairImage image;
  const auto& s = sd.symbols();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == SDSymbol::Square) {
      image.tiling.push_back(Metatile::FreeSquare);
    } else if (i + 1 == s.size()) {
      image.branch = DominoPairImage::Branch::Reduced;
    } else {
      image.tiling.push_back(s[i + 1] == SDSymbol::Domino ? Metatile::Bifence : Metatile::FilledFence);
      ++i;
    }
  }
  return image;
}

SDTiling domino_pair_unmap(const DominoPairImage& image) {
  std::vector<SDSymbol> symbols;
  for (Metatile m : image.tiling.metatiles()) {
    switch (m) {
      case Metatile::FreeSquare:
        symbols.push_back(SDSymbol::Square);
        break;
      case Metatile::FilledFence:
        symbols.push_back(SDSymbol::Domino);
        symbols.push_back(SDSymbol::Square);
        break;
      case Metatile::Bifence:
        symbols.push_back(SDSymbol::Domino);
        symbols.push_back(SDSymbol::Domino);
        break;
    }
  }
  if (image.branch == DominoPairImage::Branch::Reduced) symbols.push_back(SDSymbol::Domino);
  return SDTiling(std::move(symbols));
}

}  // namespace fencetile
