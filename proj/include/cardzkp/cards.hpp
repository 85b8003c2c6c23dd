#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cardzkp {

/// Front side of a card: blank, or a printed digit 0..9.
/// The protocols themselves only ever print {blank, 0, 1, 2, 3} plus the
/// helper values 0/1, but the engine accepts any single digit.
class CardFace {
 public:
  constexpr CardFace() = default;

  static constexpr CardFace blank() { return CardFace{}; }

  static CardFace number(int v) {
    if (v < 0 || v > 9) throw std::invalid_argument("card value out of range 0..9");
    CardFace f;
    f.value_ = v;
    return f;
  }

  bool is_blank() const { return value_ < 0; }

  int value() const {
    if (is_blank()) throw std::logic_error("blank card has no value");
    return value_;
  }

  /// Single-character code used in files and transcripts: '.' or '0'..'9'.
  char code() const { return is_blank() ? '.' : static_cast<char>('0' + value_); }

  static CardFace from_code(char ch) {
    if (ch == '.') return blank();
    if (ch >= '0' && ch <= '9') return number(ch - '0');
    throw std::invalid_argument(std::string("bad face code '") + ch + "'");
  }

  friend bool operator==(CardFace a, CardFace b) { return a.value_ == b.value_; }
  friend bool operator!=(CardFace a, CardFace b) { return !(a == b); }

 private:
  int value_ = -1;
};

enum class Orientation { kFaceDown, kFaceUp };

/// One physical card. The uid is engine bookkeeping (state-restoration
/// checks); it never appears in any event.
struct Card {
  CardFace face;
  Orientation orientation = Orientation::kFaceDown;
  std::uint64_t uid = 0;
};

/// An ordered pile of cards, index 0 on top.
using Stack = std::vector<Card>;

/// rows x cols grid of card stacks: the unit a pile-shifting shuffle acts on.
/// Positions are 0-indexed row-major flat indices.
class PileMatrix {
 public:
  PileMatrix() = default;
  PileMatrix(int id, int rows, int cols)
      : id_(id), rows_(rows), cols_(cols), stacks_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("pile dimensions must be >= 1");
  }

  int id() const { return id_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }

  Stack& at(int pos) { return stacks_.at(static_cast<std::size_t>(pos)); }
  const Stack& at(int pos) const { return stacks_.at(static_cast<std::size_t>(pos)); }
  Stack& at(int row, int col) { return at(row * cols_ + col); }
  const Stack& at(int row, int col) const { return at(row * cols_ + col); }

  /// Total number of cards across all stacks.
  std::size_t card_count() const {
    std::size_t n = 0;
    for (const auto& s : stacks_) n += s.size();
    return n;
  }

  /// True if within every row all stacks have the same height.
  bool rows_have_uniform_heights() const {
    for (int r = 0; r < rows_; ++r) {
      std::size_t h = at(r, 0).size();
      for (int c = 1; c < cols_; ++c)
        if (at(r, c).size() != h) return false;
    }
    return true;
  }

  /// Cyclic column rotation: new column j holds old column (j + s) mod cols.
  /// With s = 4 on columns (1..6) the new order is (5,6,1,2,3,4).
  void rotate_columns(int s) {
    if (cols_ == 0) return;
    s = ((s % cols_) + cols_) % cols_;
    if (s == 0) return;
    std::vector<Stack> next(stacks_.size());
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        next[static_cast<std::size_t>(r) * cols_ + c] =
            std::move(stacks_[static_cast<std::size_t>(r) * cols_ + (c + s) % cols_]);
    stacks_ = std::move(next);
  }

 private:
  int id_ = -1;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Stack> stacks_;
};

}  // namespace cardzkp
