#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cardzkp/cards.hpp"

namespace cardzkp {

enum class RejectReason {
  kOverlap,
  kClueMismatch,
  kDummyNotBlank,
  kTemplateCheckFailed,
  kMalformedHelper,
  kDotScheduleViolation,
  kFinalNotAllOnes,
  kMalformedTranscript,
  kVerdictMismatch,
};

std::string_view to_string(RejectReason r);
RejectReason reject_reason_from_string(std::string_view s);

struct Verdict {
  bool accept = false;
  std::optional<RejectReason> reason;

  static Verdict accepted() { return Verdict{true, std::nullopt}; }
  static Verdict rejected(RejectReason r) { return Verdict{false, r}; }

  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.accept == b.accept && a.reason == b.reason;
  }
};

// The verifier's view is exactly this event alphabet: public placements,
// turns, shuffles (never the hidden offset), reveals of face-up cards,
// removals, public realignments, whole-pile template checks and the verdict.

struct PlacePublicEvent {
  int pile;
  int pos;
  CardFace face;
};

struct TurnFaceDownEvent {
  int pile;
  std::vector<int> positions;
};

struct PileShiftShuffleEvent {
  int pile;
  int cols;
};

struct RevealRowEvent {
  int pile;
  int row;
  std::vector<CardFace> faces;
};

struct RevealCardEvent {
  int pile;
  int pos;
  CardFace face;
};

struct RemoveCardEvent {
  int pile;
  int pos;
};

struct CyclicRealignEvent {
  int pile;
  int offset;
};

struct TemplateCheckEvent {
  int pile;
  std::vector<CardFace> faces;
};

struct VerdictEvent {
  Verdict verdict;
};

using Event = std::variant<PlacePublicEvent, TurnFaceDownEvent, PileShiftShuffleEvent,
                           RevealRowEvent, RevealCardEvent, RemoveCardEvent, CyclicRealignEvent,
                           TemplateCheckEvent, VerdictEvent>;

/// One event per line; field order is fixed, so equal transcripts are equal
/// byte for byte. The schema is documented in the README.
std::string serialize_event(const Event& e);

struct TranscriptParseError : std::runtime_error {
  explicit TranscriptParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line(line) {}
  std::size_t line;
};

Event parse_event(std::string_view line, std::size_t line_no);

struct Transcript {
  std::vector<Event> events;

  /// The final verdict; a complete transcript has exactly one verdict event
  /// and it is the last one.
  std::optional<Verdict> verdict() const;
  bool well_formed() const;

  std::string serialize() const;
  static Transcript parse(std::string_view text);
};

}  // namespace cardzkp
