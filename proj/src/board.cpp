#include "queens/board.hpp"

#include <algorithm>
#include <stdexcept>

#include "queens/errors.hpp"

namespace queens {

std::string_view slope_name(Slope s) {
  switch (s) {
    case Slope::H: return "H";
    case Slope::V: return "V";
    case Slope::D: return "D";
    case Slope::A: return "A";
  }
  return "?";
}

Slope parse_slope(std::string_view name) {
  for (Slope s : kSlopes)
    if (slope_name(s) == name) return s;
  throw std::invalid_argument("unknown slope '" + std::string(name) + "'");
}

std::string to_string(Square s) {
  return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")";
}

std::string to_string(const Line& l) {
  return std::string(slope_name(l.slope)) + " " + std::to_string(l.offset);
}

void require_side(int n) {
  if (n < 1) throw RangeError("board side must be positive, got " + std::to_string(n));
}

void require_square(Square s, int n) {
  require_side(n);
  if (!in_range(s, n))
    throw RangeError("square " + to_string(s) + " is off the " + std::to_string(n) + "x" +
                     std::to_string(n) + " board");
}

std::array<Line, 4> lines_through(Square s, int n) {
  require_square(s, n);
  return {line_of(Slope::H, s), line_of(Slope::V, s), line_of(Slope::D, s), line_of(Slope::A, s)};
}

bool meets_board(const Line& l, int n) {
  switch (l.slope) {
    case Slope::H:
    case Slope::V: return l.offset >= 1 && l.offset <= n;
    case Slope::D: return l.offset >= 1 - n && l.offset <= n - 1;
    case Slope::A: return l.offset >= 2 && l.offset <= 2 * n;
  }
  return false;
}

std::vector<Square> line_squares(const Line& l, int n) {
  require_side(n);
  if (!meets_board(l, n))
    throw EmptyIntersectionError("line " + to_string(l) + " misses the " + std::to_string(n) +
                                 "x" + std::to_string(n) + " board");
  std::vector<Square> out;
  switch (l.slope) {
    case Slope::H:
      for (int x = 1; x <= n; ++x) out.push_back({x, l.offset});
      break;
    case Slope::V:
      for (int y = 1; y <= n; ++y) out.push_back({l.offset, y});
      break;
    case Slope::D:
      for (int x = std::max(1, 1 + l.offset); x <= std::min(n, n + l.offset); ++x)
        out.push_back({x, x - l.offset});
      break;
    case Slope::A:
      for (int x = std::max(1, l.offset - n); x <= std::min(n, l.offset - 1); ++x)
        out.push_back({x, l.offset - x});
      break;
  }
  return out;
}

std::vector<Line> all_lines(int n) {
  require_side(n);
  std::vector<Line> out;
  out.reserve(6 * n - 2);
  for (int o = 1; o <= n; ++o) out.push_back({Slope::H, o});
  for (int o = 1; o <= n; ++o) out.push_back({Slope::V, o});
  for (int o = 1 - n; o <= n - 1; ++o) out.push_back({Slope::D, o});
  for (int o = 2; o <= 2 * n; ++o) out.push_back({Slope::A, o});
  return out;
}

int count_attacked(int n, Square s) {
  int total = 0;
  for (const Line& l : lines_through(s, n))
    total += static_cast<int>(line_squares(l, n).size()) - 1;
  return total;
}

LineIndex::LineIndex(int n) : n_(n) { require_side(n); }

Line LineIndex::line(int id) const {
  if (id < n_) return {Slope::H, id + 1};
  if (id < 2 * n_) return {Slope::V, id - n_ + 1};
  if (id < 4 * n_ - 1) return {Slope::D, id - 2 * n_ - n_ + 1};
  return {Slope::A, id - (4 * n_ - 1) + 2};
}

Placement::Placement(int n, std::vector<Square> queens) : n_(n), queens_(std::move(queens)) {
  require_side(n);
  for (Square s : queens_) require_square(s, n);
  std::sort(queens_.begin(), queens_.end());
  auto dup = std::adjacent_find(queens_.begin(), queens_.end());
  if (dup != queens_.end())
    throw DuplicateSquareError("square " + to_string(*dup) + " listed twice");
}

bool Placement::contains(Square s) const {
  return std::binary_search(queens_.begin(), queens_.end(), s);
}

Placement Placement::with(Square s) const {
  auto q = queens_;
  q.push_back(s);
  return Placement(n_, std::move(q));
}

std::strong_ordering operator<=>(const Placement& a, const Placement& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.queens_.begin(), a.queens_.end(),
                                                b.queens_.begin(), b.queens_.end());
}

Placement full_board(int n) {
  std::vector<Square> all;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) all.push_back({x, y});
  return Placement(n, std::move(all));
}

Square apply_symmetry(int g, Square s, int n) {
  if (g < 0 || g >= kSymmetryCount) throw RangeError("symmetry index must be in [0,8)");
  if (g >= 4) {
    s = {n + 1 - s.x, s.y};
    g -= 4;
  }
  for (int i = 0; i < g; ++i) s = {n + 1 - s.y, s.x};
  return s;
}

Placement apply_symmetry(int g, const Placement& p) {
  std::vector<Square> img;
  img.reserve(p.queens().size());
  for (Square s : p.queens()) img.push_back(apply_symmetry(g, s, p.side()));
  return Placement(p.side(), std::move(img));
}

Placement canonical_form(const Placement& p) {
  Placement best = p;
  for (int g = 1; g < kSymmetryCount; ++g) {
    Placement img = apply_symmetry(g, p);
    if (img < best) best = std::move(img);
  }
  return best;
}

}  // namespace queens
