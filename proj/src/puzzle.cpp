#include "cardzkp/puzzle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cardzkp {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find('\n', i);
    if (j == std::string_view::npos) {
      if (i < text.size()) lines.emplace_back(text.substr(i));
      break;
    }
    lines.emplace_back(text.substr(i, j - i));
    i = j + 1;
  }
  // Trailing blank lines are tolerated on input.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_dim(const std::string& tok, int line, int col) {
  for (char ch : tok)
    if (ch < '0' || ch > '9') throw ParseError("bad dimension '" + tok + "'", line, col);
  long v = std::stol(tok);
  if (v < 1 || v > 1000) throw ParseError("dimension out of range", line, col);
  return static_cast<int>(v);
}

}  // namespace

FiveCellsPuzzle parse_fivecells(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  auto header = split_tokens(lines[0]);
  if (header.size() != 3 || header[0] != "fivecells")
    throw ParseError("expected header 'fivecells m n'", 1, 1);
  FiveCellsPuzzle p;
  p.rows = parse_dim(header[1], 1, 1);
  p.cols = parse_dim(header[2], 1, 1);
  if ((p.rows * p.cols) % 5 != 0)
    throw ParseError("grid size not divisible by 5", 1, 1);
  if (static_cast<int>(lines.size()) != p.rows + 1)
    throw ParseError("expected " + std::to_string(p.rows) + " grid rows", 1, 1);
  for (int r = 0; r < p.rows; ++r) {
    auto toks = split_tokens(lines[static_cast<std::size_t>(r) + 1]);
    if (static_cast<int>(toks.size()) != p.cols)
      throw ParseError("expected " + std::to_string(p.cols) + " tokens", r + 2, 1);
    for (int c = 0; c < p.cols; ++c) {
      const std::string& tok = toks[static_cast<std::size_t>(c)];
      if (tok == ".") continue;
      if (tok.size() == 1 && tok[0] >= '0' && tok[0] <= '9') {
        int v = tok[0] - '0';
        // A pentomino cell always keeps at least one internal neighbor, so
        // 4 borders are impossible; reject at parse time.
        if (v > 3) throw ParseError("clue out of range 0..3", r + 2, c + 1);
        p.clues[{r, c}] = v;
      } else {
        throw ParseError("unknown symbol '" + tok + "'", r + 2, c + 1);
      }
    }
  }
  return p;
}

MeadowsPuzzle parse_meadows(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  auto header = split_tokens(lines[0]);
  if (header.size() != 2 || header[0] != "meadows")
    throw ParseError("expected header 'meadows n'", 1, 1);
  MeadowsPuzzle p;
  p.size = parse_dim(header[1], 1, 1);
  if (static_cast<int>(lines.size()) != p.size + 1)
    throw ParseError("expected " + std::to_string(p.size) + " grid rows", 1, 1);
  for (int r = 0; r < p.size; ++r) {
    const std::string& row = lines[static_cast<std::size_t>(r) + 1];
    if (static_cast<int>(row.size()) != p.size)
      throw ParseError("expected " + std::to_string(p.size) + " cells", r + 2,
                       static_cast<int>(row.size()) + 1);
    for (int c = 0; c < p.size; ++c) {
      char ch = row[static_cast<std::size_t>(c)];
      if (ch == '*')
        p.dots.push_back({r, c});
      else if (ch != '.')
        throw ParseError(std::string("unknown symbol '") + ch + "'", r + 2, c + 1);
    }
  }
  if (p.dots.empty()) throw ParseError("a meadows puzzle needs at least one dot", 1, 1);
  // Row-major construction already orders the dots; keep that order public.
  return p;
}

Puzzle parse_puzzle(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  auto header = split_tokens(lines[0]);
  if (!header.empty() && header[0] == "fivecells") return parse_fivecells(text);
  if (!header.empty() && header[0] == "meadows") return parse_meadows(text);
  throw ParseError("unknown puzzle kind", 1, 1);
}

std::string serialize_puzzle(const FiveCellsPuzzle& p) {
  std::string out = "fivecells " + std::to_string(p.rows) + " " + std::to_string(p.cols) + "\n";
  for (int r = 0; r < p.rows; ++r) {
    for (int c = 0; c < p.cols; ++c) {
      if (c) out += ' ';
      auto it = p.clues.find({r, c});
      out += it == p.clues.end() ? std::string(".") : std::to_string(it->second);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_puzzle(const MeadowsPuzzle& p) {
  std::string out = "meadows " + std::to_string(p.size) + "\n";
  std::set<Cell> dots(p.dots.begin(), p.dots.end());
  for (int r = 0; r < p.size; ++r) {
    for (int c = 0; c < p.size; ++c) out += dots.count({r, c}) ? '*' : '.';
    out += '\n';
  }
  return out;
}

std::string serialize_puzzle(const Puzzle& p) {
  return std::visit([](const auto& v) { return serialize_puzzle(v); }, p);
}

Partition parse_partition(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty partition", 1, 1);
  Partition p;
  p.rows = static_cast<int>(lines.size());
  p.cols = static_cast<int>(lines[0].size());
  if (p.cols == 0) throw ParseError("empty partition row", 1, 1);
  for (int r = 0; r < p.rows; ++r) {
    const std::string& row = lines[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != p.cols)
      throw ParseError("ragged partition row", r + 1, static_cast<int>(row.size()) + 1);
    for (int c = 0; c < p.cols; ++c) {
      char ch = row[static_cast<std::size_t>(c)];
      int id;
      if (ch >= 'A' && ch <= 'Z')
        id = ch - 'A';
      else if (ch >= 'a' && ch <= 'z')
        id = 26 + ch - 'a';
      else
        throw ParseError(std::string("bad region label '") + ch + "'", r + 1, c + 1);
      p.region_ids.push_back(id);
    }
  }
  return p;
}

std::string serialize_partition(const Partition& p) {
  std::map<int, char> relabel;
  std::string out;
  for (int r = 0; r < p.rows; ++r) {
    for (int c = 0; c < p.cols; ++c) {
      int id = p.at(r, c);
      auto it = relabel.find(id);
      if (it == relabel.end()) {
        std::size_t k = relabel.size();
        if (k >= 52) throw std::invalid_argument("more than 52 regions");
        char label = k < 26 ? static_cast<char>('A' + k) : static_cast<char>('a' + k - 26);
        it = relabel.emplace(id, label).first;
      }
      out += it->second;
    }
    out += '\n';
  }
  return out;
}

std::map<int, std::vector<Cell>> Partition::regions() const {
  std::map<int, std::vector<Cell>> out;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out[at(r, c)].push_back({r, c});
  return out;
}

ExtendedSolution extended_solution(const FiveCellsPuzzle& puz, const Partition& part) {
  if (part.rows != puz.rows || part.cols != puz.cols)
    throw std::invalid_argument("partition shape does not match puzzle");
  ExtendedSolution ext{part.rows, part.cols, {}};
  ext.values.reserve(static_cast<std::size_t>(part.rows) * part.cols);
  for (int r = 0; r < part.rows; ++r) {
    for (int c = 0; c < part.cols; ++c) {
      int borders = 0;
      for (auto [dr, dc] : {Cell{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        int rr = r + dr, cc = c + dc;
        if (rr < 0 || rr >= part.rows || cc < 0 || cc >= part.cols ||
            part.at(rr, cc) != part.at(r, c))
          ++borders;
      }
      ext.values.push_back(borders);
    }
  }
  return ext;
}

std::vector<Violation> validate_fivecells(const FiveCellsPuzzle& puz, const Partition& part) {
  std::vector<Violation> out;
  if (part.rows != puz.rows || part.cols != puz.cols) {
    out.push_back({"partition shape does not match puzzle"});
    return out;
  }
  for (const auto& [id, cells] : part.regions()) {
    if (cells.size() != 5) {
      out.push_back({"region " + std::to_string(id) + " has " + std::to_string(cells.size()) +
                     " cells, expected 5"});
      continue;
    }
    std::vector<CellOffset> norm(cells.begin(), cells.end());
    int mr = norm[0].first, mc = norm[0].second;
    for (auto [r, c] : norm) {
      mr = std::min(mr, r);
      mc = std::min(mc, c);
    }
    for (auto& [r, c] : norm) {
      r -= mr;
      c -= mc;
    }
    std::sort(norm.begin(), norm.end());
    if (pentomino_index(norm) < 0)
      out.push_back({"region " + std::to_string(id) + " is not a pentomino"});
  }
  if (!out.empty()) return out;
  auto ext = extended_solution(puz, part);
  for (const auto& [cell, clue] : puz.clues) {
    int got = ext.at(cell.first, cell.second);
    if (got != clue)
      out.push_back({"clue at (" + std::to_string(cell.first) + "," + std::to_string(cell.second) +
                     ") is " + std::to_string(clue) + " but the partition gives " +
                     std::to_string(got)});
  }
  return out;
}

std::vector<Violation> validate_meadows(const MeadowsPuzzle& puz, const Partition& part) {
  std::vector<Violation> out;
  if (part.rows != puz.size || part.cols != puz.size) {
    out.push_back({"partition shape does not match puzzle"});
    return out;
  }
  std::set<Cell> dots(puz.dots.begin(), puz.dots.end());
  for (const auto& [id, cells] : part.regions()) {
    int mr = cells[0].first, mxr = cells[0].first;
    int mc = cells[0].second, mxc = cells[0].second;
    for (auto [r, c] : cells) {
      mr = std::min(mr, r);
      mxr = std::max(mxr, r);
      mc = std::min(mc, c);
      mxc = std::max(mxc, c);
    }
    int h = mxr - mr + 1, w = mxc - mc + 1;
    if (h != w || static_cast<int>(cells.size()) != h * w) {
      out.push_back({"region " + std::to_string(id) + " is not a square"});
      continue;
    }
    int nd = 0;
    for (auto cell : cells) nd += dots.count(cell) ? 1 : 0;
    if (nd != 1)
      out.push_back({"region " + std::to_string(id) + " contains " + std::to_string(nd) +
                     " dots, expected 1"});
  }
  return out;
}

bool same_partition(const Partition& a, const Partition& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  std::map<int, int> a2b, b2a;
  for (std::size_t i = 0; i < a.region_ids.size(); ++i) {
    int x = a.region_ids[i], y = b.region_ids[i];
    auto [ia, oka] = a2b.emplace(x, y);
    if (!oka && ia->second != y) return false;
    auto [ib, okb] = b2a.emplace(y, x);
    if (!okb && ib->second != x) return false;
  }
  return true;
}

}  // namespace cardzkp
