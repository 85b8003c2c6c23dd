#pragma once

#include "cardzkp/protocol.hpp"
#include "cardzkp/table.hpp"

namespace cardzkp {

/// Row-major flat layout of the padded grid: four dummy rows and columns
/// appended below and to the right of the real m x n grid, so neighbors of
/// flat index i are i-1, i+1, i-(n+4), i+(n+4).
struct GridTape {
  int real_rows = 0;
  int real_cols = 0;

  int height() const { return real_rows + 4; }
  int width() const { return real_cols + 4; }
  int length() const { return height() * width(); }
  int flat(int r, int c) const { return r * width() + c; }
  int row_of(int i) const { return i / width(); }
  int col_of(int i) const { return i % width(); }
  bool is_real(int r, int c) const { return r < real_rows && c < real_cols; }
  int left(int i) const { return i - 1; }
  int right(int i) const { return i + 1; }
  int up(int i) const { return i - width(); }
  int down(int i) const { return i + width(); }
};

/// What the prover intends to do, iteration by iteration: print the
/// pentomino `shape_index` with its template anchored at (anchor_row,
/// anchor_col) of the padded grid. Honest scripts come straight from a
/// partition; cheats tweak the entries or the directives.
struct FiveCellsScript {
  struct Region {
    int anchor_row = 0;
    int anchor_col = 0;
    int shape_index = 0;
  };
  std::vector<Region> regions;
  CheatDirectives cheat;
};

/// Honest script from a partition: regions sorted by bounding-box top-left
/// (row-major), shape looked up in the canonical enumeration. A region that
/// is not a pentomino cannot be played honestly; the derived script forges
/// the initial template pile instead (slot 0), which the first pile check
/// catches.
FiveCellsScript fivecells_script(const FiveCellsPuzzle& puz, const Partition& part);

/// Full protocol run. Executes padding, template pile build and check, k
/// print iterations with reconstruction and re-check, and the final clue
/// and dummy reveals. Never throws for protocol failures: every cheat ends
/// in a Reject verdict with a machine-readable reason.
RunResult prove_fivecells(const FiveCellsPuzzle& puz, const FiveCellsScript& script,
                          RunOptions opts = {});
RunResult prove_fivecells(const FiveCellsPuzzle& puz, const Partition& part, RunOptions opts = {},
                          CheatDirectives cheat = {});

/// Accepting transcript generated without any solution: the phantom prover
/// runs the same driver with dummy anchors and forces the deterministic
/// reveal outcomes, so the event structure is identical by construction
/// and the random reveal positions keep their uniform distribution.
RunResult simulate_fivecells(const FiveCellsPuzzle& puz, RunOptions opts = {});

/// Reveals all 63 stacks against the canonical templates, re-hides them,
/// logs one TemplateCheck. Exposed for tests; the driver calls it at build
/// time and after every reconstruction.
bool verify_template_pile(Table& t, PileMatrix& pile, bool force_canonical = false);

/// Canonical 63 x 25 face list the check compares against.
const std::vector<CardFace>& canonical_fivecells_pile_faces();

}  // namespace cardzkp
