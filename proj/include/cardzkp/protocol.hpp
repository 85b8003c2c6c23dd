#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cardzkp/events.hpp"
#include "cardzkp/puzzle.hpp"

namespace cardzkp {

/// Adversarial directives. Every Reject path of the verifier is reachable
/// through these (or through a wrong partition), so the soundness suite
/// runs end-to-end with no test-only hooks.
struct CheatDirectives {
  /// Re-anchor the last region onto the first region's anchor (prints
  /// collide; the verifier sees a non-blank reveal).
  bool overlap_last_region = false;
  /// Re-anchor the last region so it prints into the dummy padding.
  bool dummy_spill_last_region = false;
  /// Corrupt this template slot when the pile is first built.
  int forge_initial_slot = -1;
  /// Swap a corrupted template back during this 0-based iteration's
  /// reconstruction.
  int forge_reconstruction_iteration = -1;
  /// Place a doubled helper 1 at this 0-based chosen-cut ordinal
  /// (cuts are counted across the whole run, opens only).
  int malformed_helper_cut = -1;

  bool any() const {
    return overlap_last_region || dummy_spill_last_region || forge_initial_slot >= 0 ||
           forge_reconstruction_iteration >= 0 || malformed_helper_cut >= 0;
  }
};

struct RunOptions {
  std::uint64_t seed = 0;
  /// Keep ground truth observable for tests (does not change the events).
  bool test_mode = false;
};

struct RunStats {
  long long shuffles = 0;
  long long reveal_cards = 0;
  int iterations = 0;
  /// Non-blank cards sitting on real-region cells at the end (test mode).
  std::optional<long long> printed_nonblank_real;
  /// Non-blank cards on dummy cells at the end (test mode).
  std::optional<long long> nonblank_dummy;
};

struct RunResult {
  Verdict verdict;
  Transcript transcript;
  RunStats stats;
};

RunStats collect_stats(const Transcript& t);

}  // namespace cardzkp
