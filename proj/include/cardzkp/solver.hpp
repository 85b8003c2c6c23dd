#pragma once

#include <cstddef>

#include "cardzkp/puzzle.hpp"

namespace cardzkp {

/// Exhaustive backtracking over pentomino placements: scan for the first
/// unassigned cell row-major, try each canonical shape whose row-major
/// first cell lands there, prune on clue consistency. Deterministic output
/// order; exhaustive when fewer than `limit` solutions exist.
std::vector<Partition> solve_fivecells(const FiveCellsPuzzle& puz, std::size_t limit);

/// Backtracking over one square per dot (row-major dot order), then a full
/// coverage check. Deterministic; exhaustive under `limit`.
std::vector<Partition> solve_meadows(const MeadowsPuzzle& puz, std::size_t limit);

}  // namespace cardzkp
