#include "cardzkp/table.hpp"

#include <numeric>

namespace cardzkp {

PileMatrix Table::new_face_down_grid(int rows, int cols, CardFace face) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be >= 1");
  PileMatrix m = make_pile(rows, cols);
  for (int pos = 0; pos < m.size(); ++pos) place_public(m, pos, face);
  std::vector<int> all(static_cast<std::size_t>(m.size()));
  std::iota(all.begin(), all.end(), 0);
  turn_face_down(m, all);
  return m;
}

void Table::place_public(PileMatrix& m, int pos, CardFace face) {
  m.at(pos).insert(m.at(pos).begin(), make_card(face, Orientation::kFaceUp));
  log_.events.push_back(PlacePublicEvent{m.id(), pos, face});
}

Card& Table::top_card(PileMatrix& m, int pos) {
  Stack& s = m.at(pos);
  if (s.empty()) throw std::logic_error("no card at position " + std::to_string(pos));
  return s.front();
}

void Table::turn_face_down(PileMatrix& m, const std::vector<int>& positions) {
  for (int pos : positions) {
    Card& c = top_card(m, pos);
    if (c.orientation != Orientation::kFaceUp)
      throw std::invalid_argument("turn_face_down on a face-down card");
    c.orientation = Orientation::kFaceDown;
  }
  log_.events.push_back(TurnFaceDownEvent{m.id(), positions});
}

void Table::turn_row_face_down(PileMatrix& m, int row) {
  std::vector<int> positions(static_cast<std::size_t>(m.cols()));
  std::iota(positions.begin(), positions.end(), row * m.cols());
  turn_face_down(m, positions);
}

CardFace Table::reveal_card(PileMatrix& m, int pos) {
  Card& c = top_card(m, pos);
  if (c.orientation == Orientation::kFaceUp)
    throw std::invalid_argument("reveal of an already face-up card");
  c.orientation = Orientation::kFaceUp;
  log_.events.push_back(RevealCardEvent{m.id(), pos, c.face});
  return c.face;
}

std::vector<CardFace> Table::reveal_row(PileMatrix& m, int row) {
  if (row < 0 || row >= m.rows()) throw std::invalid_argument("bad row");
  std::vector<CardFace> faces;
  faces.reserve(static_cast<std::size_t>(m.cols()));
  for (int col = 0; col < m.cols(); ++col) {
    Card& c = top_card(m, row * m.cols() + col);
    if (c.orientation == Orientation::kFaceUp)
      throw std::invalid_argument("reveal of an already face-up card");
    c.orientation = Orientation::kFaceUp;
    faces.push_back(c.face);
  }
  log_.events.push_back(RevealRowEvent{m.id(), row, faces});
  return faces;
}

Card Table::remove_top_card(PileMatrix& m, int pos) {
  Stack& s = m.at(pos);
  if (s.empty()) throw std::logic_error("remove from empty stack");
  Card c = s.front();
  s.erase(s.begin());
  log_.events.push_back(RemoveCardEvent{m.id(), pos});
  return c;
}

void Table::pile_shifting_shuffle(PileMatrix& m, bool require_uniform_rows) {
  if (require_uniform_rows && !m.rows_have_uniform_heights())
    throw std::logic_error("pile-shifting shuffle requires equal stack heights per row");
  int s;
  if (scripted_pos_ < scripted_shifts_.size()) {
    s = scripted_shifts_[scripted_pos_++];
    if (s < 0 || s >= m.cols()) throw std::logic_error("scripted shift out of range");
  } else {
    s = rng_.uniform_shift(m.cols());
  }
  m.rotate_columns(s);
  shift_history_.push_back(s);
  // The offset s stays off the record: only the fact of the shuffle is public.
  log_.events.push_back(PileShiftShuffleEvent{m.id(), m.cols()});
}

void Table::cyclic_realign(PileMatrix& m, int offset) {
  if (offset < 0 || offset >= m.cols()) throw std::invalid_argument("realign offset out of range");
  m.rotate_columns(offset);
  log_.events.push_back(CyclicRealignEvent{m.id(), offset});
}

bool Table::template_check(PileMatrix& m, const std::vector<CardFace>& expected) {
  std::vector<CardFace> faces;
  for (int pos = 0; pos < m.size(); ++pos) {
    for (const Card& c : m.at(pos)) {
      if (c.orientation == Orientation::kFaceUp)
        throw std::invalid_argument("template check on a face-up card");
      faces.push_back(c.face);
    }
  }
  log_.events.push_back(TemplateCheckEvent{m.id(), faces});
  return faces == expected;
}

void Table::set_verdict(Verdict v) {
  if (log_.verdict()) throw std::logic_error("verdict already set");
  log_.events.push_back(VerdictEvent{v});
}

void Table::force_face(PileMatrix& m, int pos, CardFace face) {
  Card& c = top_card(m, pos);
  if (c.orientation == Orientation::kFaceUp)
    throw std::logic_error("force_face on a face-up card");
  c.face = face;
}

void Table::force_face_at_depth(PileMatrix& m, int pos, std::size_t depth, CardFace face) {
  Stack& s = m.at(pos);
  if (depth >= s.size()) throw std::logic_error("force_face_at_depth out of range");
  if (s[depth].orientation == Orientation::kFaceUp)
    throw std::logic_error("force_face on a face-up card");
  s[depth].face = face;
}

void Table::require_test_mode(const char* what) const {
  if (!opts_.test_mode)
    throw std::logic_error(std::string(what) + " requires a test-mode table");
}

const std::vector<int>& Table::shift_history() const {
  require_test_mode("shift_history");
  return shift_history_;
}

CardFace Table::peek_face(const PileMatrix& m, int pos) const {
  require_test_mode("peek_face");
  const Stack& s = m.at(pos);
  if (s.empty()) throw std::logic_error("peek on empty stack");
  return s.front().face;
}

std::uint64_t Table::peek_uid(const PileMatrix& m, int pos) const {
  require_test_mode("peek_uid");
  const Stack& s = m.at(pos);
  if (s.empty()) throw std::logic_error("peek on empty stack");
  return s.front().uid;
}

void Table::script_shifts(std::vector<int> shifts) {
  require_test_mode("script_shifts");
  scripted_shifts_ = std::move(shifts);
  scripted_pos_ = 0;
}

}  // namespace cardzkp
