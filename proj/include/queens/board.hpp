#pragma once

// Board geometry for the queens no-3-in-a-line problem.
//
// Squares are 1-based: the board of side n is [1,n] x [1,n], x is the
// column and y is the row. Lines have slope 0 (H), infinity (V), +1 (D)
// or -1 (A) and are identified by an integer offset:
//
//   H: y = offset            offset in [1, n]
//   V: x = offset            offset in [1, n]
//   D: x - y = offset        offset in [1-n, n-1]
//   A: x + y = offset        offset in [2, 2n]
//
// There are 6n-2 lines meeting the board.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace queens {

struct Square {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Square&, const Square&) = default;
};

enum class Slope : std::uint8_t { H, V, D, A };

inline constexpr std::array<Slope, 4> kSlopes = {Slope::H, Slope::V, Slope::D, Slope::A};

std::string_view slope_name(Slope s);
// Inverse of slope_name; throws std::invalid_argument on unknown names.
Slope parse_slope(std::string_view name);

struct Line {
  Slope slope = Slope::H;
  int offset = 0;

  friend constexpr auto operator<=>(const Line&, const Line&) = default;

  // True if the square satisfies this line's equation.
  [[nodiscard]] constexpr bool contains(Square s) const {
    switch (slope) {
      case Slope::H: return s.y == offset;
      case Slope::V: return s.x == offset;
      case Slope::D: return s.x - s.y == offset;
      case Slope::A: return s.x + s.y == offset;
    }
    return false;
  }
};

std::string to_string(Square s);
std::string to_string(const Line& l);

[[nodiscard]] constexpr bool in_range(Square s, int n) {
  return s.x >= 1 && s.x <= n && s.y >= 1 && s.y <= n;
}

// The line of the given slope through `s`. No range check.
[[nodiscard]] constexpr Line line_of(Slope slope, Square s) {
  switch (slope) {
    case Slope::H: return {slope, s.y};
    case Slope::V: return {slope, s.x};
    case Slope::D: return {slope, s.x - s.y};
    case Slope::A: return {slope, s.x + s.y};
  }
  return {};
}

// Throws RangeError unless n >= 1.
void require_side(int n);
// Throws RangeError unless `s` lies on the board of side n.
void require_square(Square s, int n);

// The four lines through `s`, in slope order H, V, D, A.
std::array<Line, 4> lines_through(Square s, int n);

[[nodiscard]] bool meets_board(const Line& l, int n);

// Squares of the board on `l`, ordered by x (then y).
// Throws EmptyIntersectionError if the line misses the board.
std::vector<Square> line_squares(const Line& l, int n);

// Every line meeting the board, in slope order then increasing offset.
std::vector<Line> all_lines(int n);

// Number of other squares sharing a line with `s`.
int count_attacked(int n, Square s);

// Dense numbering of the 6n-2 lines, used for O(1) per-line counters.
// Ids are grouped by slope: H in [0,n), V in [n,2n), D in [2n,4n-1),
// A in [4n-1,6n-2).
class LineIndex {
 public:
  explicit LineIndex(int n);

  [[nodiscard]] int side() const { return n_; }
  [[nodiscard]] int size() const { return 6 * n_ - 2; }

  // Precondition: the line meets the board.
  [[nodiscard]] int id(const Line& l) const {
    switch (l.slope) {
      case Slope::H: return l.offset - 1;
      case Slope::V: return n_ + l.offset - 1;
      case Slope::D: return 2 * n_ + l.offset + n_ - 1;
      case Slope::A: return 4 * n_ - 1 + l.offset - 2;
    }
    return -1;
  }
  [[nodiscard]] Line line(int id) const;
  [[nodiscard]] std::array<int, 4> ids_through(Square s) const {
    return {s.y - 1, n_ + s.x - 1, 2 * n_ + s.x - s.y + n_ - 1, 4 * n_ - 1 + s.x + s.y - 2};
  }

 private:
  int n_;
};

// A set of queens on the board of side n. Squares are kept sorted by
// (x, y) and are unique and in range.
class Placement {
 public:
  // Throws RangeError for n < 1 or out-of-range squares and
  // DuplicateSquareError for repeated squares.
  Placement(int n, std::vector<Square> queens);
  explicit Placement(int n) : Placement(n, {}) {}

  [[nodiscard]] int side() const { return n_; }
  [[nodiscard]] int size() const { return static_cast<int>(queens_.size()); }
  [[nodiscard]] bool empty() const { return queens_.empty(); }
  [[nodiscard]] std::span<const Square> queens() const { return queens_; }
  [[nodiscard]] bool contains(Square s) const;

  // Copy with one more queen. Throws like the constructor.
  [[nodiscard]] Placement with(Square s) const;

  friend bool operator==(const Placement&, const Placement&) = default;
  // Compares n, then the sorted square sequences lexicographically.
  friend std::strong_ordering operator<=>(const Placement& a, const Placement& b);

 private:
  int n_;
  std::vector<Square> queens_;
};

// The full board of side n.
Placement full_board(int n);

// The dihedral group of the square, indexed 0..7. Element 0 is the
// identity, 1..3 are rotations by 90, 180, 270 degrees counterclockwise,
// 4..7 are those rotations composed with the reflection x -> n+1-x.
inline constexpr int kSymmetryCount = 8;

Square apply_symmetry(int g, Square s, int n);
Placement apply_symmetry(int g, const Placement& p);

// Least of the 8 images of p.
Placement canonical_form(const Placement& p);

}  // namespace queens
