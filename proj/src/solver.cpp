#include "cardzkp/solver.hpp"

#include <algorithm>
#include <set>

namespace cardzkp {

namespace {

struct FiveCellsSearch {
  const FiveCellsPuzzle& puz;
  std::size_t limit;
  std::vector<int> grid;  // region id per cell, -1 unassigned
  std::vector<Partition> out;

  explicit FiveCellsSearch(const FiveCellsPuzzle& p, std::size_t lim)
      : puz(p), limit(lim), grid(static_cast<std::size_t>(p.rows) * p.cols, -1) {}

  int clue_at(int r, int c) const {
    auto it = puz.clues.find({r, c});
    return it == puz.clues.end() ? -1 : it->second;
  }

  void run() {
    if (limit == 0) return;
    rec(0);
  }

  void rec(int region_id) {
    if (out.size() >= limit) return;
    int first = -1;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid[i] < 0) {
        first = static_cast<int>(i);
        break;
      }
    if (first < 0) {
      out.push_back(Partition{puz.rows, puz.cols, grid});
      return;
    }
    const int r0 = first / puz.cols, c0 = first % puz.cols;
    const auto& shapes = fixed_pentominoes();
    for (std::size_t pi = 0; pi < shapes.size(); ++pi) {
      const Pentomino& p = shapes[pi];
      // Anchor so the shape's row-major first cell covers the first free
      // grid cell; anything else would have filled an earlier cell.
      const auto [fr, fc] = p.cells[0];
      const int br = r0 - fr, bc = c0 - fc;
      bool fits = true;
      for (auto [r, c] : p.cells) {
        int rr = br + r, cc = bc + c;
        if (rr < 0 || rr >= puz.rows || cc < 0 || cc >= puz.cols ||
            grid[static_cast<std::size_t>(rr) * puz.cols + cc] >= 0) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      // Border counts are fixed by the shape alone, so every covered clue
      // can be checked at placement time.
      auto counts = border_counts(p);
      for (std::size_t i = 0; i < 5 && fits; ++i) {
        auto [r, c] = p.cells[i];
        int clue = clue_at(br + r, bc + c);
        if (clue >= 0 && clue != counts[i]) fits = false;
      }
      if (!fits) continue;
      for (auto [r, c] : p.cells)
        grid[static_cast<std::size_t>(br + r) * puz.cols + (bc + c)] = region_id;
      rec(region_id + 1);
      for (auto [r, c] : p.cells)
        grid[static_cast<std::size_t>(br + r) * puz.cols + (bc + c)] = -1;
      if (out.size() >= limit) return;
    }
  }
};

}  // namespace

std::vector<Partition> solve_fivecells(const FiveCellsPuzzle& puz, std::size_t limit) {
  if ((puz.rows * puz.cols) % 5 != 0)
    throw std::invalid_argument("grid size not divisible by 5");
  FiveCellsSearch search(puz, limit);
  search.run();
  return search.out;
}

namespace {

struct MeadowsSearch {
  const MeadowsPuzzle& puz;
  std::size_t limit;
  std::vector<int> grid;
  std::set<Cell> dots;
  std::vector<Partition> out;

  MeadowsSearch(const MeadowsPuzzle& p, std::size_t lim)
      : puz(p),
        limit(lim),
        grid(static_cast<std::size_t>(p.size) * p.size, -1),
        dots(p.dots.begin(), p.dots.end()) {}

  void rec(std::size_t dot_index) {
    if (out.size() >= limit) return;
    const int n = puz.size;
    if (dot_index == puz.dots.size()) {
      for (int x : grid)
        if (x < 0) return;
      out.push_back(Partition{n, n, grid});
      return;
    }
    auto [dr, dc] = puz.dots[dot_index];
    for (int s = 1; s <= n; ++s) {
      for (int r0 = std::max(0, dr - s + 1); r0 <= std::min(dr, n - s); ++r0) {
        for (int c0 = std::max(0, dc - s + 1); c0 <= std::min(dc, n - s); ++c0) {
          bool ok = true;
          int ndots = 0;
          for (int r = r0; r < r0 + s && ok; ++r)
            for (int c = c0; c < c0 + s && ok; ++c) {
              if (grid[static_cast<std::size_t>(r) * n + c] >= 0) ok = false;
              if (dots.count({r, c})) ++ndots;
            }
          if (!ok || ndots != 1) continue;
          for (int r = r0; r < r0 + s; ++r)
            for (int c = c0; c < c0 + s; ++c)
              grid[static_cast<std::size_t>(r) * n + c] = static_cast<int>(dot_index);
          rec(dot_index + 1);
          for (int r = r0; r < r0 + s; ++r)
            for (int c = c0; c < c0 + s; ++c) grid[static_cast<std::size_t>(r) * n + c] = -1;
          if (out.size() >= limit) return;
        }
      }
    }
  }
};

}  // namespace

std::vector<Partition> solve_meadows(const MeadowsPuzzle& puz, std::size_t limit) {
  MeadowsSearch search(puz, limit);
  if (limit > 0) search.rec(0);
  return search.out;
}

}  // namespace cardzkp
