#include "cardzkp/chosen_cut.hpp"

namespace cardzkp {

ChosenCutSession ChosenCutSession::open(Table& t, PileMatrix& target, int secret_index,
                                        ChosenCutOptions opts) {
  const int q = target.size();
  if (q < 1) throw std::invalid_argument("chosen cut needs a nonempty sequence");
  if (secret_index < 0 || secret_index >= q)
    throw std::invalid_argument("secret index out of range");
  {
    std::size_t h = target.at(0).size();
    for (int i = 1; i < q; ++i)
      if (target.at(i).size() != h)
        throw std::logic_error("chosen cut requires equal stack heights");
  }

  ChosenCutSession s;
  s.table_ = &t;
  s.target_ = &target;
  s.q_ = q;
  s.m_ = t.make_pile(3, q);

  // Row 0: the target sequence, flattened row-major.
  for (int i = 0; i < q; ++i) s.m_.at(0, i) = std::move(target.at(i));

  // Row 1: the prover's hidden marker, a 1 at the secret column. Placed
  // face-down, so placement carries no event.
  for (int i = 0; i < q; ++i) {
    bool one = i == secret_index ||
               (opts.malformed_helper && q >= 2 && i == (secret_index + 1) % q);
    s.m_.at(1, i).push_back(t.make_card(CardFace::number(one ? 1 : 0)));
  }

  // Row 2: the realignment marker, placed face-up for all to see, then
  // turned down with everything else.
  for (int i = 0; i < q; ++i)
    t.place_public(s.m_, 2 * q + i, CardFace::number(i == 0 ? 1 : 0));
  t.turn_row_face_down(s.m_, 2);

  t.pile_shifting_shuffle(s.m_);

  auto faces = t.reveal_row(s.m_, 1);
  int ones = 0;
  for (int i = 0; i < q; ++i) {
    if (faces[i] == CardFace::number(1)) {
      ++ones;
      s.anchor_ = i;
    }
  }
  s.ok_ = ones == 1;
  return s;
}

int ChosenCutSession::pos_of(int offset) const {
  int off = ((offset % q_) + q_) % q_;
  return (anchor_ + off) % q_;
}

Stack& ChosenCutSession::stack_at_offset(int offset) { return m_.at(0, pos_of(offset)); }

Stack ChosenCutSession::take_stack_at_offset(int offset) {
  return std::move(m_.at(0, pos_of(offset)));
}

void ChosenCutSession::put_stack_at_offset(int offset, Stack s) {
  m_.at(0, pos_of(offset)) = std::move(s);
}

CardFace ChosenCutSession::reveal_top_at_offset(int offset) {
  return table_->reveal_card(m_, pos_of(offset));
}

Card ChosenCutSession::remove_top_at_offset(int offset) {
  return table_->remove_top_card(m_, pos_of(offset));
}

void ChosenCutSession::force_top_face_at_offset(int offset, CardFace face) {
  table_->force_face(m_, pos_of(offset), face);
}

bool ChosenCutSession::close() {
  if (!ok_ || closed_) throw std::logic_error("close on a dead or closed session");
  closed_ = true;
  Table& t = *table_;

  t.turn_row_face_down(m_, 1);
  // Row 0 may be one card short after a printing removal; the shuffle
  // itself is still well-defined.
  t.pile_shifting_shuffle(m_, /*require_uniform_rows=*/false);

  auto faces = t.reveal_row(m_, 2);
  int ones = 0, where = -1;
  for (int i = 0; i < q_; ++i) {
    if (faces[i] == CardFace::number(1)) {
      ++ones;
      where = i;
    }
  }
  if (ones != 1) return false;

  t.cyclic_realign(m_, where);
  t.turn_row_face_down(m_, 2);

  for (int i = 0; i < q_; ++i) target_->at(i) = std::move(m_.at(0, i));
  return true;
}

}  // namespace cardzkp
