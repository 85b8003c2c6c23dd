#pragma once

#include "cardzkp/protocol.hpp"

namespace cardzkp {

/// What the verifier may expect from an event, derivable from public
/// puzzle data alone: either fixed content (deterministic pattern) or a
/// position that is uniform over the cut size.
enum class SiteKind { kFixed, kUniformPos };

struct AuditResult {
  Verdict verdict;
  /// Per consumed event; meaningful only when the walk stayed structurally
  /// sound up to that event.
  std::vector<SiteKind> site_kinds;
};

/// Replays every verifier check from public data only: helper rows contain
/// exactly one 1, printing reveals are blank, template checks match the
/// canonical piles, the dot schedule and final reveals are correct, and
/// the embedded verdict equals the recomputed one. A transcript the walk
/// cannot align is Reject{malformed-transcript}; a verdict that disagrees
/// with the recomputed checks is Reject{verdict-mismatch}.
AuditResult audit_fivecells(const FiveCellsPuzzle& puz, const Transcript& t);
AuditResult audit_meadows(const MeadowsPuzzle& puz, const Transcript& t);
AuditResult audit(const Puzzle& puz, const Transcript& t);

}  // namespace cardzkp
