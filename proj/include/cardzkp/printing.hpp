#pragma once

#include "cardzkp/chosen_cut.hpp"

namespace cardzkp {

/// Which card the prover selects when both cards of a printing stack are
/// blank. Either choice is sound; the honest default keeps the area's
/// original card in place by discarding the template's blank.
enum class BlankPolicy { kPreferTemplate, kPreferArea };

enum class PrintOutcome { kSuccess, kOverlap, kMalformedHelper };

struct PrintingOptions {
  BlankPolicy blank_policy = BlankPolicy::kPreferTemplate;
  /// Phantom-prover: force every selected card to reveal as blank.
  bool force_blank_reveals = false;
  /// Cheat hook: 0-based cell index whose per-stack cut gets a doubled 1.
  int malformed_helper_at_cell = -1;
  /// Counts chosen cuts opened so far across the run (for cut-ordinal
  /// cheat targeting); incremented per per-stack cut.
  int* cut_counter = nullptr;
  int malformed_helper_at_cut = -1;
};

/// The printing subprotocol. For every cell of the p x q area (row-major),
/// the template card and the area card form a two-card stack; a chosen cut
/// with q = 2 selects one card, which is revealed. A blank reveal removes
/// that card and the survivor becomes the cell's card; a non-blank reveal
/// is the verifier catching overlapping regions.
///
/// `template_cards` is the borrowed template stack, p*q cards row-major.
/// On kSuccess the area holds the template's values where it was non-blank
/// and its original cards elsewhere. Emits exactly 2pq shuffles and pq
/// RevealCard events on success.
PrintOutcome print_template(Table& t, Stack template_cards, AreaHandle& area,
                            const PrintingOptions& opts = {});

}  // namespace cardzkp
