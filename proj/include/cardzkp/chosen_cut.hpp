#pragma once

#include <optional>

#include "cardzkp/table.hpp"

namespace cardzkp {

struct ChosenCutOptions {
  /// Cheat hook: place a second helper 1, which the verifier catches when
  /// the helper row is revealed.
  bool malformed_helper = false;
};

/// One chosen-cut session over a target pile. The target's stacks are moved
/// row-major into row 0 of a fresh 3xq matrix; a helper 1 marks the secret
/// column in row 1 and a realign 1 marks column 0 in row 2. After the first
/// shuffle, revealing row 1 exposes the anchor: the stack there is the one
/// the prover selected, at a position uniform over q. close() runs the
/// second shuffle, reveals row 2, publicly realigns, and moves the stacks
/// back; absent in-session mutation the target is restored uid-exactly.
class ChosenCutSession {
 public:
  static ChosenCutSession open(Table& t, PileMatrix& target, int secret_index,
                               ChosenCutOptions opts = {});

  /// False when the revealed helper row did not contain exactly one 1
  /// (protocol rejection; the session is dead).
  bool ok() const { return ok_; }
  int anchor() const { return anchor_; }
  int size() const { return q_; }

  /// Row-0 stack at shuffled position (anchor + offset) mod q. Offsets ride
  /// on the cyclic order, which the shuffle preserves.
  Stack& stack_at_offset(int offset);
  Stack take_stack_at_offset(int offset);
  void put_stack_at_offset(int offset, Stack s);

  /// Reveal / remove the top card of the anchor stack (printing path).
  CardFace reveal_top_at_offset(int offset);
  Card remove_top_at_offset(int offset);
  /// Phantom-prover: force the face of the face-down top card.
  void force_top_face_at_offset(int offset, CardFace face);

  /// Second shuffle, realign-row reveal, public realignment, stack
  /// restoration. False if the realign row was malformed.
  bool close();

  int pile_id() const { return m_.id(); }

 private:
  ChosenCutSession() = default;
  int pos_of(int offset) const;

  Table* table_ = nullptr;
  PileMatrix* target_ = nullptr;
  PileMatrix m_;
  int q_ = 0;
  int anchor_ = -1;
  bool ok_ = false;
  bool closed_ = false;
};

/// A p x q window of cells inside an open chosen-cut session over a grid
/// flattened row-major with width `grid_width`. Cell (r, c) lives at fixed
/// offset r*grid_width + c from the anchor, modulo the sequence length.
struct AreaHandle {
  ChosenCutSession* session;
  int grid_width;
  int rows;
  int cols;

  int offset_of(int r, int c) const { return r * grid_width + c; }
  Stack& cell(int r, int c) { return session->stack_at_offset(offset_of(r, c)); }
};

}  // namespace cardzkp
