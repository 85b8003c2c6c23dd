#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cardzkp/pentomino.hpp"

namespace cardzkp {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

using Cell = std::pair<int, int>;  // (row, col)

/// m x n grid; clue = number of the cell's edges that are region borders,
/// outer boundary included. A pentomino cell always has an internal
/// neighbor, so clues are 0..3.
struct FiveCellsPuzzle {
  int rows = 0;
  int cols = 0;
  std::map<Cell, int> clues;
};

/// n x n grid to be partitioned into squares, one dot per square. Dots are
/// kept in row-major order; that order is public and drives the per-
/// iteration reveal schedule.
struct MeadowsPuzzle {
  int size = 0;
  std::vector<Cell> dots;
};

using Puzzle = std::variant<FiveCellsPuzzle, MeadowsPuzzle>;

/// Region-labeled candidate solution: a region id per cell.
struct Partition {
  int rows = 0;
  int cols = 0;
  std::vector<int> region_ids;  // row-major

  int at(int r, int c) const { return region_ids.at(static_cast<std::size_t>(r) * cols + c); }
  /// Cells per region id.
  std::map<int, std::vector<Cell>> regions() const;
  friend bool operator==(const Partition& a, const Partition& b) = default;
};

// File formats (documented in the README):
//   fivecells:  "fivecells m n" then m lines of n tokens, "." or digit 0-3
//   meadows:    "meadows n" then n lines of n chars, "." or "*"
//   partition:  one line per row, single-character labels A-Z / a-z
FiveCellsPuzzle parse_fivecells(std::string_view text);
MeadowsPuzzle parse_meadows(std::string_view text);
Puzzle parse_puzzle(std::string_view text);
std::string serialize_puzzle(const FiveCellsPuzzle& p);
std::string serialize_puzzle(const MeadowsPuzzle& p);
std::string serialize_puzzle(const Puzzle& p);

Partition parse_partition(std::string_view text);
/// Labels are normalized to first-occurrence order (A, B, ... then a, b, ...).
std::string serialize_partition(const Partition& p);

struct Violation {
  std::string what;
};

/// Direct NP-witness checks; violations are data, not errors.
std::vector<Violation> validate_fivecells(const FiveCellsPuzzle& puz, const Partition& part);
std::vector<Violation> validate_meadows(const MeadowsPuzzle& puz, const Partition& part);

/// Grid of per-cell region border counts (outer boundary counts as border).
/// Computable for any labeling; values are 0..3 for pentomino partitions.
struct ExtendedSolution {
  int rows = 0;
  int cols = 0;
  std::vector<int> values;  // row-major

  int at(int r, int c) const { return values.at(static_cast<std::size_t>(r) * cols + c); }
};

ExtendedSolution extended_solution(const FiveCellsPuzzle& puz, const Partition& part);

/// Partition equality up to region relabeling.
bool same_partition(const Partition& a, const Partition& b);

}  // namespace cardzkp
