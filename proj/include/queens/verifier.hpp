#pragma once

#include <optional>
#include <vector>

#include "queens/board.hpp"

namespace queens {

// Queen count on every line of the board, indexed by (slope, offset).
class LineCounts {
 public:
  explicit LineCounts(int n);
  explicit LineCounts(const Placement& p);

  [[nodiscard]] int side() const { return index_.side(); }
  [[nodiscard]] int operator[](const Line& l) const { return counts_[index_.id(l)]; }
  [[nodiscard]] int at_id(int id) const { return counts_[id]; }
  [[nodiscard]] const LineIndex& index() const { return index_; }

  void add(Square s);
  void remove(Square s);

  // Largest count among the four lines through s.
  [[nodiscard]] int max_through(Square s) const;

 private:
  LineIndex index_;
  std::vector<int> counts_;
};

// Result of checking a placement for the no-3-in-a-line property and
// for saturation. good == no_three && addable.empty().
struct VerifyReport {
  bool no_three = false;
  std::vector<Square> addable;
  bool good = false;
  std::optional<Line> violating_line;
};

// First line (in slope-then-offset order) holding three or more queens.
std::optional<Line> find_three_in_line(const Placement& p);
bool has_three_in_line(const Placement& p);

// Unoccupied squares whose four lines each carry at most one queen.
// Throws InvalidPlacementError if p already has three in a line.
std::vector<Square> addable_squares(const Placement& p);

// Placements with three in a line are never good.
bool is_good(const Placement& p);

VerifyReport verify(const Placement& p);

}  // namespace queens
