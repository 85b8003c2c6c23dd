#pragma once

#include <cstdint>
#include <vector>

#include "cardzkp/cards.hpp"
#include "cardzkp/events.hpp"
#include "cardzkp/rng.hpp"

namespace cardzkp {

struct TableOptions {
  std::uint64_t seed = 0;
  /// Test mode unlocks ground-truth accessors (hidden shifts, face-down
  /// peeks, scripted shifts). Production accessors refuse regardless; the
  /// event stream is identical in both modes.
  bool test_mode = false;
};

/// Owns the ground-truth card state, the randomness source and the event
/// log. Every observable action flows through it, so the verifier view
/// (the transcript) is constructed by mediation, not by trust: no event
/// ever carries a hidden shuffle offset or the face of a face-down card.
class Table {
 public:
  explicit Table(TableOptions opts) : opts_(opts), rng_(opts.seed) {}

  // ----- pile and card creation -----

  /// Registers an empty pile (no events; stacks are filled by the caller
  /// or by helpers below).
  PileMatrix make_pile(int rows, int cols) { return PileMatrix(next_pile_id_++, rows, cols); }

  /// Fresh card with a sequential uid. Creation is silent; only public
  /// placement is observable.
  Card make_card(CardFace face, Orientation orientation = Orientation::kFaceDown) {
    return Card{face, orientation, next_uid_++};
  }

  /// Publicly places single blank-or-numbered cards on every cell, then
  /// turns them all face-down. Logs one PlacePublic per cell plus one
  /// TurnFaceDown for the whole pile.
  PileMatrix new_face_down_grid(int rows, int cols, CardFace face);

  /// Publicly places a face-up card at `pos` (stack top) and logs it.
  void place_public(PileMatrix& m, int pos, CardFace face);

  // ----- observable actions -----

  void turn_face_down(PileMatrix& m, const std::vector<int>& positions);
  void turn_row_face_down(PileMatrix& m, int row);

  /// Flips the top card at `pos` face-up and logs the exposed face.
  CardFace reveal_card(PileMatrix& m, int pos);

  /// Flips the top card of every stack in `row` face-up; logs the row.
  std::vector<CardFace> reveal_row(PileMatrix& m, int row);

  /// Removes the (face-up) top card at `pos`; logs the removal.
  Card remove_top_card(PileMatrix& m, int pos);

  /// Rotates columns by a hidden uniform shift and logs only that a shuffle
  /// happened. `require_uniform_rows` is relaxed by sessions that have
  /// legitimately mutated a borrowed stack (printing removes a card).
  void pile_shifting_shuffle(PileMatrix& m, bool require_uniform_rows = true);

  /// Public cyclic rotation by an offset both parties observed; logs it.
  void cyclic_realign(PileMatrix& m, int offset);

  /// Whole-pile template check: exposes every card of every stack in order,
  /// logs the faces as one TemplateCheck event, re-hides the pile, and
  /// reports whether the faces match `expected`.
  bool template_check(PileMatrix& m, const std::vector<CardFace>& expected);

  void set_verdict(Verdict v);

  /// Phantom-prover capability: silently rewrites the face of the top card
  /// at `pos` while it is face-down. Used by the simulator to force reveal
  /// outcomes; an honest prover never calls it.
  void force_face(PileMatrix& m, int pos, CardFace face);
  /// Same, for a specific depth within the stack (template piles).
  void force_face_at_depth(PileMatrix& m, int pos, std::size_t depth, CardFace face);

  const Transcript& transcript() const { return log_; }
  bool test_mode() const { return opts_.test_mode; }

  // ----- test-mode-only ground truth -----

  /// Hidden shift of every shuffle so far, in order.
  const std::vector<int>& shift_history() const;
  /// Face of the top card at `pos` regardless of orientation.
  CardFace peek_face(const PileMatrix& m, int pos) const;
  /// Uid of the top card at `pos`.
  std::uint64_t peek_uid(const PileMatrix& m, int pos) const;
  /// Forces the next shuffles to use these shifts (exhaustive-shift tests).
  void script_shifts(std::vector<int> shifts);

 private:
  void require_test_mode(const char* what) const;
  Card& top_card(PileMatrix& m, int pos);

  TableOptions opts_;
  RandomSource rng_;
  Transcript log_;
  std::uint64_t next_uid_ = 0;
  int next_pile_id_ = 0;
  std::vector<int> shift_history_;
  std::vector<int> scripted_shifts_;
  std::size_t scripted_pos_ = 0;
};

}  // namespace cardzkp
