#include "cardzkp/events.hpp"

#include <charconv>
#include <sstream>

namespace cardzkp {

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::kOverlap: return "overlap";
    case RejectReason::kClueMismatch: return "clue-mismatch";
    case RejectReason::kDummyNotBlank: return "dummy-not-blank";
    case RejectReason::kTemplateCheckFailed: return "template-check-failed";
    case RejectReason::kMalformedHelper: return "malformed-helper";
    case RejectReason::kDotScheduleViolation: return "dot-schedule-violation";
    case RejectReason::kFinalNotAllOnes: return "final-not-all-ones";
    case RejectReason::kMalformedTranscript: return "malformed-transcript";
    case RejectReason::kVerdictMismatch: return "verdict-mismatch";
  }
  throw std::logic_error("bad RejectReason");
}

RejectReason reject_reason_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(RejectReason::kVerdictMismatch); ++i) {
    auto r = static_cast<RejectReason>(i);
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown reject reason: " + std::string(s));
}

namespace {

void append_ints(std::string& out, const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
}

void append_faces(std::string& out, const std::vector<CardFace>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ',';
    out += fs[i].code();
  }
}

}  // namespace

std::string serialize_event(const Event& e) {
  std::string out;
  std::visit(
      [&out](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, PlacePublicEvent>) {
          out = "place_public pile=" + std::to_string(ev.pile) + " pos=" + std::to_string(ev.pos) +
                " face=";
          out += ev.face.code();
        } else if constexpr (std::is_same_v<T, TurnFaceDownEvent>) {
          out = "turn_face_down pile=" + std::to_string(ev.pile) + " positions=";
          append_ints(out, ev.positions);
        } else if constexpr (std::is_same_v<T, PileShiftShuffleEvent>) {
          out = "pile_shift_shuffle pile=" + std::to_string(ev.pile) +
                " cols=" + std::to_string(ev.cols);
        } else if constexpr (std::is_same_v<T, RevealRowEvent>) {
          out = "reveal_row pile=" + std::to_string(ev.pile) + " row=" + std::to_string(ev.row) +
                " faces=";
          append_faces(out, ev.faces);
        } else if constexpr (std::is_same_v<T, RevealCardEvent>) {
          out = "reveal_card pile=" + std::to_string(ev.pile) + " pos=" + std::to_string(ev.pos) +
                " face=";
          out += ev.face.code();
        } else if constexpr (std::is_same_v<T, RemoveCardEvent>) {
          out = "remove_card pile=" + std::to_string(ev.pile) + " pos=" + std::to_string(ev.pos);
        } else if constexpr (std::is_same_v<T, CyclicRealignEvent>) {
          out = "cyclic_realign pile=" + std::to_string(ev.pile) +
                " offset=" + std::to_string(ev.offset);
        } else if constexpr (std::is_same_v<T, TemplateCheckEvent>) {
          out = "template_check pile=" + std::to_string(ev.pile) + " faces=";
          append_faces(out, ev.faces);
        } else if constexpr (std::is_same_v<T, VerdictEvent>) {
          if (ev.verdict.accept) {
            out = "verdict accept";
          } else {
            out = "verdict reject reason=";
            out += to_string(*ev.verdict.reason);
          }
        }
      },
      e);
  return out;
}

namespace {

struct LineReader {
  std::string_view line;
  std::size_t line_no;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw TranscriptParseError(what + " at line " + std::to_string(line_no), line_no);
  }

  std::string_view word() {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ') ++pos;
    if (start == pos) fail("missing token");
    return line.substr(start, pos - start);
  }

  bool done() {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    return pos == line.size();
  }

  std::string_view field(std::string_view key) {
    auto w = word();
    if (w.size() < key.size() + 1 || w.substr(0, key.size()) != key || w[key.size()] != '=')
      fail("expected field '" + std::string(key) + "='");
    return w.substr(key.size() + 1);
  }

  int int_field(std::string_view key) {
    auto v = field(key);
    int out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) fail("bad integer field");
    return out;
  }

  std::vector<int> int_list_field(std::string_view key) {
    auto v = field(key);
    std::vector<int> out;
    std::size_t i = 0;
    while (i < v.size()) {
      std::size_t j = v.find(',', i);
      if (j == std::string_view::npos) j = v.size();
      int x = 0;
      auto [p, ec] = std::from_chars(v.data() + i, v.data() + j, x);
      if (ec != std::errc() || p != v.data() + j) fail("bad integer list");
      out.push_back(x);
      i = j + 1;
    }
    return out;
  }

  std::vector<CardFace> face_list_field(std::string_view key) {
    auto v = field(key);
    std::vector<CardFace> out;
    std::size_t i = 0;
    while (i < v.size()) {
      std::size_t j = v.find(',', i);
      if (j == std::string_view::npos) j = v.size();
      if (j != i + 1) fail("bad face list");
      out.push_back(CardFace::from_code(v[i]));
      i = j + 1;
    }
    if (out.empty()) fail("empty face list");
    return out;
  }

  CardFace face_field(std::string_view key) {
    auto v = field(key);
    if (v.size() != 1) fail("bad face field");
    return CardFace::from_code(v[0]);
  }
};

}  // namespace

Event parse_event(std::string_view line, std::size_t line_no) {
  LineReader r{line, line_no};
  auto name = r.word();
  Event out;
  try {
    if (name == "place_public") {
      PlacePublicEvent e;
      e.pile = r.int_field("pile");
      e.pos = r.int_field("pos");
      e.face = r.face_field("face");
      out = e;
    } else if (name == "turn_face_down") {
      TurnFaceDownEvent e;
      e.pile = r.int_field("pile");
      e.positions = r.int_list_field("positions");
      out = e;
    } else if (name == "pile_shift_shuffle") {
      PileShiftShuffleEvent e;
      e.pile = r.int_field("pile");
      e.cols = r.int_field("cols");
      out = e;
    } else if (name == "reveal_row") {
      RevealRowEvent e;
      e.pile = r.int_field("pile");
      e.row = r.int_field("row");
      e.faces = r.face_list_field("faces");
      out = e;
    } else if (name == "reveal_card") {
      RevealCardEvent e;
      e.pile = r.int_field("pile");
      e.pos = r.int_field("pos");
      e.face = r.face_field("face");
      out = e;
    } else if (name == "remove_card") {
      RemoveCardEvent e;
      e.pile = r.int_field("pile");
      e.pos = r.int_field("pos");
      out = e;
    } else if (name == "cyclic_realign") {
      CyclicRealignEvent e;
      e.pile = r.int_field("pile");
      e.offset = r.int_field("offset");
      out = e;
    } else if (name == "template_check") {
      TemplateCheckEvent e;
      e.pile = r.int_field("pile");
      e.faces = r.face_list_field("faces");
      out = e;
    } else if (name == "verdict") {
      auto w = r.word();
      if (w == "accept") {
        out = VerdictEvent{Verdict::accepted()};
      } else if (w == "reject") {
        auto reason = r.field("reason");
        out = VerdictEvent{Verdict::rejected(reject_reason_from_string(reason))};
      } else {
        r.fail("bad verdict");
      }
    } else {
      r.fail("unknown event '" + std::string(name) + "'");
    }
  } catch (const std::invalid_argument& ex) {
    r.fail(ex.what());
  }
  if (!r.done()) r.fail("trailing data");
  return out;
}

std::optional<Verdict> Transcript::verdict() const {
  if (events.empty()) return std::nullopt;
  if (const auto* v = std::get_if<VerdictEvent>(&events.back())) return v->verdict;
  return std::nullopt;
}

bool Transcript::well_formed() const {
  if (!verdict()) return false;
  for (std::size_t i = 0; i + 1 < events.size(); ++i)
    if (std::holds_alternative<VerdictEvent>(events[i])) return false;
  return true;
}

std::string Transcript::serialize() const {
  std::string out;
  for (const auto& e : events) {
    out += serialize_event(e);
    out += '\n';
  }
  return out;
}

Transcript Transcript::parse(std::string_view text) {
  Transcript t;
  std::size_t line_no = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find('\n', i);
    if (j == std::string_view::npos)
      throw TranscriptParseError("missing final newline", line_no);
    std::string_view line = text.substr(i, j - i);
    if (line.empty()) throw TranscriptParseError("empty line", line_no);
    t.events.push_back(parse_event(line, line_no));
    i = j + 1;
    ++line_no;
  }
  return t;
}

}  // namespace cardzkp
