#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cardzkp/cards.hpp"

namespace cardzkp {

using CellOffset = std::pair<int, int>;  // (row, col)

/// A fixed pentomino: five edge-connected cells, normalized so min row and
/// min col are both 0, cells sorted row-major. Rotations and reflections
/// count as distinct shapes; there are 63.
struct Pentomino {
  std::array<CellOffset, 5> cells;

  friend bool operator==(const Pentomino& a, const Pentomino& b) { return a.cells == b.cells; }
  friend auto operator<=>(const Pentomino& a, const Pentomino& b) { return a.cells <=> b.cells; }
};

/// All 63 fixed pentominoes in canonical order: lexicographic on the sorted
/// cell-offset list. Computed once, cached.
const std::vector<Pentomino>& fixed_pentominoes();

/// Index of a normalized shape in the canonical order, or -1.
int pentomino_index(const std::vector<CellOffset>& normalized_cells);

/// Per-cell count of the four edges not shared with another cell of the
/// same pentomino (values 0..3), aligned with p.cells.
std::array<int, 5> border_counts(const Pentomino& p);

/// Image of p under one of the 8 dihedral transforms (0 = identity),
/// re-normalized. Used to derive free-pentomino orbits.
Pentomino dihedral_image(const Pentomino& p, int transform);

/// A p x q card grid encoding one region type at its top-left corner.
struct Template {
  int rows = 0;
  int cols = 0;
  std::vector<CardFace> faces;  // row-major

  CardFace at(int r, int c) const { return faces.at(static_cast<std::size_t>(r) * cols + c); }
  friend bool operator==(const Template& a, const Template& b) = default;
};

/// 5x5 template: the pentomino's cells carry its border counts, every other
/// cell is blank.
Template fivecells_template(const Pentomino& p);

/// n x n template with 1s exactly on the top-left side x side block.
Template meadows_template(int side, int n);

/// Text rendering, one row per line, faces as '.'/digits.
std::string render_template(const Template& t);

}  // namespace cardzkp
