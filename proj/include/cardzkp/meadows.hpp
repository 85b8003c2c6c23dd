#pragma once

#include "cardzkp/protocol.hpp"
#include "cardzkp/table.hpp"

namespace cardzkp {

/// Padded layout for Meadows: n-1 dummy rows and columns, width 2n-1.
struct MeadowsTape {
  int n = 0;

  int side() const { return 2 * n - 1; }
  int length() const { return side() * side(); }
  int flat(int r, int c) const { return r * side() + c; }
  bool is_real(int r, int c) const { return r < n && c < n; }
};

/// Square to print at iteration i: side `size` anchored at the square's
/// top-left corner. Iteration i is bound to dotted cell c_i (row-major dot
/// order), which the Step-4 reveal schedule enforces.
struct MeadowsScript {
  struct Square {
    int anchor_row = 0;
    int anchor_col = 0;
    int size = 1;
  };
  std::vector<Square> squares;
  CheatDirectives cheat;
};

/// Honest script from a partition: for each dot in row-major order, the
/// square of the region containing it. Non-square regions forge the initial
/// pile (slot 0), which the first check catches.
MeadowsScript meadows_script(const MeadowsPuzzle& puz, const Partition& part);

RunResult prove_meadows(const MeadowsPuzzle& puz, const MeadowsScript& script, RunOptions opts = {});
RunResult prove_meadows(const MeadowsPuzzle& puz, const Partition& part, RunOptions opts = {},
                        CheatDirectives cheat = {});

RunResult simulate_meadows(const MeadowsPuzzle& puz, RunOptions opts = {});

/// Reveals the n stacks against build_meadows_template(1..n, n); re-hides.
bool verify_square_pile(Table& t, PileMatrix& pile, int n, bool force_canonical = false);

std::vector<CardFace> canonical_meadows_pile_faces(int n);

}  // namespace cardzkp
