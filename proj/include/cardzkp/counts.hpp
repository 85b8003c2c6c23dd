#pragma once

#include <string>

#include "cardzkp/puzzle.hpp"

namespace cardzkp {

/// Exact card and shuffle accounting for an honest run. Helper cards are
/// counted as a reusable pool (two per column of the largest cut); the
/// reconstruction of a used template needs fresh number cards only, since
/// the blanks removed during printing cover its blank cells. The full
/// derivation is in the README.
struct HonestCounts {
  int iterations = 0;
  long long grid_cards = 0;
  long long template_cards = 0;
  long long helper_cards = 0;
  long long fresh_number_cards = 0;
  long long total_cards = 0;
  long long shuffles = 0;
  long long shuffles_per_iteration = 0;
  long long printed_cards = 0;

  std::string summary() const;
};

HonestCounts fivecells_counts(const FiveCellsPuzzle& puz);
HonestCounts meadows_counts(const MeadowsPuzzle& puz);

}  // namespace cardzkp
