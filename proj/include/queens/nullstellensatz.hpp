#pragma once

// Polynomial certificates that a small placement is not good.
//
// For a placement of fewer than lower_bound(n) queens we pick lines of
// three kinds: every line holding two queens (type 1), one line through
// each queen that shares no line with another queen (type 2), and padding
// lines off the board (type 3), with a fixed number of lines per slope.
// The product f of their linear forms has a nonzero coefficient at a
// monomial x^t1 y^t2 with t1 + t2 = deg f and t1, t2 < n, so f cannot
// vanish on all of [1,n]^2. A square where f is nonzero lies on no type 1
// or type 2 line, hence is empty and addable.

#include <array>
#include <vector>

#include "queens/board.hpp"
#include "queens/polynomial.hpp"

namespace queens {

// Counts indexed by slope in the order H, V, D, A.
using PerSlope = std::array<int, 4>;

[[nodiscard]] constexpr int slot(Slope s) { return static_cast<int>(s); }

struct IsolatedQueenLine {
  Line line;
  Square queen;

  friend bool operator==(const IsolatedQueenLine&, const IsolatedQueenLine&) = default;
};

struct LinePlan {
  std::vector<Line> type1;
  std::vector<IsolatedQueenLine> type2;
  std::vector<Line> type3;
  PerSlope targets{};
  int t1 = 0;  // exponent of x in the target monomial
  int t2 = 0;  // exponent of y

  // type1, then type2, then type3.
  [[nodiscard]] std::vector<Line> lines() const;
  // Per-slope count of type 1 and type 2 lines.
  [[nodiscard]] PerSlope forced_counts() const;

  friend bool operator==(const LinePlan&, const LinePlan&) = default;
};

struct CnCertificate {
  int n = 0;
  int q = 0;
  int q_isolated = 0;
  LinePlan plan;
  BigInt coefficient;
  Square witness;

  friend bool operator==(const CnCertificate&, const CnCertificate&) = default;
};

// Lines holding at least two queens, sorted.
std::vector<Line> defined_lines(const Placement& p);

// Queens on no defined line, sorted.
std::vector<Square> isolated_queens(const Placement& p);

struct PlanShape {
  PerSlope targets{};
  int t1 = 0;
  int t2 = 0;
};

// Lines per slope and target monomial for a placement on the n x n board
// with q_isolated isolated queens. Depends on n mod 4, and on whether
// exactly one queen is isolated.
PlanShape plan_shape(int n, int q_isolated);

// Upper bound on type 1 plus type 2 lines of any one slope, for a
// placement of at most lower_bound(n)-1 queens of which q_isolated are
// isolated: floor((lower_bound(n)-1-q_isolated)/2) + ceil(q_isolated/4).
int line_count_bound(int n, int q_isolated);

// Throws BoundNotApplicableError if |p| >= lower_bound(n), PlannerError if
// the plan's coefficient turns out zero or its invariants fail.
LinePlan plan_line_set(const Placement& p);

// Throws BoundNotApplicableError as above and InvalidPlacementError if p has
// three in a line. The witness is the (x,y)-least square where f != 0.
CnCertificate refute_goodness(const Placement& p);

// Independent recheck of a certificate against its placement: recomputes
// the type 1 and type 2 lines, re-expands the product, compares the
// coefficient and evaluates f at the witness. Returns an empty string on
// success, otherwise the first failure.
std::string check_certificate(const CnCertificate& cert, const Placement& p);

}  // namespace queens
