#include "cardzkp/pentomino.hpp"

#include <algorithm>
#include <set>

namespace cardzkp {

namespace {

std::vector<CellOffset> normalize(std::vector<CellOffset> cells) {
  int mr = cells[0].first, mc = cells[0].second;
  for (auto [r, c] : cells) {
    mr = std::min(mr, r);
    mc = std::min(mc, c);
  }
  for (auto& [r, c] : cells) {
    r -= mr;
    c -= mc;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Pentomino> enumerate_all() {
  // Grow edge-connected cell sets one cell at a time, deduplicating on the
  // normalized form.
  std::set<std::vector<CellOffset>> shapes{{{0, 0}}};
  for (int step = 0; step < 4; ++step) {
    std::set<std::vector<CellOffset>> next;
    for (const auto& s : shapes) {
      std::set<CellOffset> have(s.begin(), s.end());
      for (auto [r, c] : s) {
        for (auto [dr, dc] : {CellOffset{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          CellOffset cand{r + dr, c + dc};
          if (have.count(cand)) continue;
          auto grown = s;
          grown.push_back(cand);
          next.insert(normalize(std::move(grown)));
        }
      }
    }
    shapes = std::move(next);
  }
  std::vector<Pentomino> out;
  for (const auto& s : shapes) {
    Pentomino p;
    std::copy(s.begin(), s.end(), p.cells.begin());
    out.push_back(p);
  }
  // std::set iteration is already sorted: canonical order is lexicographic
  // on the sorted cell list.
  return out;
}

}  // namespace

const std::vector<Pentomino>& fixed_pentominoes() {
  static const std::vector<Pentomino> all = enumerate_all();
  return all;
}

int pentomino_index(const std::vector<CellOffset>& normalized_cells) {
  if (normalized_cells.size() != 5) return -1;
  Pentomino probe;
  std::copy(normalized_cells.begin(), normalized_cells.end(), probe.cells.begin());
  const auto& all = fixed_pentominoes();
  auto it = std::lower_bound(all.begin(), all.end(), probe);
  if (it == all.end() || !(*it == probe)) return -1;
  return static_cast<int>(it - all.begin());
}

std::array<int, 5> border_counts(const Pentomino& p) {
  std::array<int, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) {
    auto [r, c] = p.cells[i];
    int borders = 4;
    for (auto [dr, dc] : {CellOffset{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      CellOffset n{r + dr, c + dc};
      if (std::find(p.cells.begin(), p.cells.end(), n) != p.cells.end()) --borders;
    }
    out[i] = borders;
  }
  return out;
}

Pentomino dihedral_image(const Pentomino& p, int transform) {
  if (transform < 0 || transform > 7) throw std::invalid_argument("transform must be 0..7");
  std::vector<CellOffset> cells;
  for (auto [r, c] : p.cells) {
    switch (transform) {
      case 0: cells.push_back({r, c}); break;
      case 1: cells.push_back({c, -r}); break;
      case 2: cells.push_back({-r, -c}); break;
      case 3: cells.push_back({-c, r}); break;
      case 4: cells.push_back({r, -c}); break;
      case 5: cells.push_back({-r, c}); break;
      case 6: cells.push_back({c, r}); break;
      case 7: cells.push_back({-c, -r}); break;
    }
  }
  auto norm = normalize(std::move(cells));
  Pentomino out;
  std::copy(norm.begin(), norm.end(), out.cells.begin());
  return out;
}

Template fivecells_template(const Pentomino& p) {
  Template t{5, 5, std::vector<CardFace>(25, CardFace::blank())};
  auto counts = border_counts(p);
  for (std::size_t i = 0; i < 5; ++i) {
    auto [r, c] = p.cells[i];
    t.faces[static_cast<std::size_t>(r) * 5 + c] = CardFace::number(counts[i]);
  }
  return t;
}

Template meadows_template(int side, int n) {
  if (n < 1) throw std::invalid_argument("grid side must be >= 1");
  if (side < 1 || side > n) throw std::invalid_argument("square side out of range 1..n");
  Template t{n, n, std::vector<CardFace>(static_cast<std::size_t>(n) * n, CardFace::blank())};
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c)
      t.faces[static_cast<std::size_t>(r) * n + c] = CardFace::number(1);
  return t;
}

std::string render_template(const Template& t) {
  std::string out;
  for (int r = 0; r < t.rows; ++r) {
    for (int c = 0; c < t.cols; ++c) out += t.at(r, c).code();
    out += '\n';
  }
  return out;
}

}  // namespace cardzkp
