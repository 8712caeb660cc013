#pragma once

// Row/column counting audit of a placement.
//
// U is the set of squares on no row or column holding two queens, C_i and
// R_j its column and row slices. a < b are the extreme columns with C_i
// nonempty and c their count; a' < b' and r are the row analogues. q'' is
// the number of queens alone in both their row and column.
//
// For a good placement with r, c >= 2 the squares of C_a and C_b are each
// occupied or attacked along a +-1 diagonal holding two queens, which
// forces at least 2r - 2 - min(q'', 2) such diagonals, and
//   2r - 2 - min(q'', 2) >= 2n - q - 2.
// With at most q diagonals available this gives q >= n - 1, and for even n
// a parity argument rules out q = n - 1.

#include <optional>

#include "queens/board.hpp"

namespace queens {

struct EvenCaseAnalysis {
  bool q_dd_zero = false;        // which branch applies
  int required_pm1_lines = 0;    // n when q'' = 0, n - 1 otherwise
  int available_pm1_lines = 0;   // n - 2
  bool contradiction = false;    // required > available
};

struct AuditReport {
  int n = 0;
  int q = 0;
  int q_dd = 0;
  int u_size = 0;
  // Report is in the frame rotated by (x,y) -> (y, n+1-x) when set.
  bool rotated = false;

  int c = 0;
  std::optional<int> a, b;
  int r = 0;
  std::optional<int> a_prime, b_prime;

  int slope_pm1_lines_defined = 0;
  // Defined +1 (index 0) and -1 (index 1) lines through two squares of
  // C_a u C_b. At most one each once b - a >= b' - a'.
  std::array<int, 2> pm1_lines_through_two_edge_squares{};
  // Queens on C_a u C_b.
  int edge_queens = 0;

  int inequality_lhs = 0;  // 2r - 2 - min(q'', 2)
  int inequality_rhs = 0;  // 2n - q - 2

  bool good = false;
  // Conclusions. nullopt when the placement is not good or the branch does
  // not apply (e.g. r or c below 2).
  std::optional<bool> cr_bound_holds;         // c, r >= n - (q - q'')/2
  std::optional<bool> degenerate_bound_holds; // c <= 1 or r <= 1  =>  q >= 2(n-1)
  std::optional<bool> diagonal_count_holds;   // defined +-1 lines >= lhs
  std::optional<bool> chain_holds;            // lhs >= rhs
  std::optional<bool> q_at_least_n_minus_1;
  // Present for even n with q <= n - 1.
  std::optional<EvenCaseAnalysis> even_case;
  // Every applicable conclusion holds (vacuously true when not good).
  bool bound_holds = true;
};

// Throws InvalidPlacementError if p has three in a line.
AuditReport audit(const Placement& p);

// (x,y) -> (y, n+1-x).
Placement rotate_quarter(const Placement& p);

}  // namespace queens
