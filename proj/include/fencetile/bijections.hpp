#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fencetile/tiling.hpp"

namespace fencetile {

enum class SDSymbol { Square, Domino };

// Square-domino tiling of a board. There are f_n of them on an n-board.
class SDTiling {
 public:
  SDTiling() = default;
  explicit SDTiling(std::vector<SDSymbol> symbols) : symbols_(std::move(symbols)) {}

  const std::vector<SDSymbol>& symbols() const { return symbols_; }
  int length() const;
  int domino_count() const;

  // String over {S, D}.
  std::string to_string() const;
  static SDTiling parse(std::string_view text);

  friend bool operator==(const SDTiling&, const SDTiling&) = default;
  friend auto operator<=>(const SDTiling&, const SDTiling&) = default;

 private:
  std::vector<SDSymbol> symbols_;
};

// Ordered m-tuple of square-domino tilings. For a spliced (mq + r)-board
// the first r boards have length q + 1 and the rest length q.
struct SDTuple {
  std::vector<SDTiling> boards;

  // Boards joined with '|', e.g. "SSD|DD".
  std::string to_string() const;
  static SDTuple parse(std::string_view text);

  friend bool operator==(const SDTuple&, const SDTuple&) = default;
  friend auto operator<=>(const SDTuple&, const SDTuple&) = default;
};

// All square-domino tilings of an n-board, squares before dominoes.
std::vector<SDTiling> enumerate_sd_tilings(int n);
// Cartesian product of board tilings with the splice lengths for an
// N-board and modulus m.
std::vector<SDTuple> enumerate_sd_tuples(int board_length, int m);

// Cells are numbered from 0. Board j of the tuple receives, in order, the
// contents of every cell whose index is j mod m; the posts of each
// (1,m-1)-fence land on consecutive positions of one board and become a
// domino. For odd length and m = 2, board 0 (cells 0, 2, 4, ...) is the
// longer one. Throws std::invalid_argument for incomplete tilings or any
// fence whose gap is not m - 1.
SDTuple splice(const CellOccupancy& occ, int m);
// Inverse of splice. Throws std::invalid_argument if the board lengths do
// not match the splice pattern for any board length.
CellOccupancy unsplice(const SDTuple& tuple, int m);

// Image of a square-domino tiling under the left-to-right pairing
// DD -> bifence, DS -> filled fence, S -> free square. A trailing isolated
// D is dropped and the image lands in the reduced branch.
struct DominoPairImage {
  enum class Branch { NTiling, Reduced };

  Branch branch = Branch::NTiling;
  Tiling tiling;

  friend bool operator==(const DominoPairImage&, const DominoPairImage&) = default;
  friend auto operator<=>(const DominoPairImage&, const DominoPairImage&) = default;
};

DominoPairImage domino_pair_map(const SDTiling& sd);
SDTiling domino_pair_unmap(const DominoPairImage& image);

}  // namespace fencetile
