#include "queens/elementary.hpp"

#include <algorithm>
#include <vector>

#include "queens/errors.hpp"
#include "queens/verifier.hpp"

namespace queens {

Placement rotate_quarter(const Placement& p) {
  const int n = p.side();
  std::vector<Square> out;
  for (Square s : p.queens()) out.push_back({s.y, n + 1 - s.x});
  return Placement(n, std::move(out));
}

namespace {

AuditReport measure(const Placement& p) {
  const int n = p.side();
  AuditReport rep;
  rep.n = n;
  rep.q = p.size();

  std::vector<int> per_col(n + 1, 0), per_row(n + 1, 0);
  for (Square s : p.queens()) {
    ++per_col[s.x];
    ++per_row[s.y];
  }
  for (Square s : p.queens())
    if (per_col[s.x] == 1 && per_row[s.y] == 1) ++rep.q_dd;

  // U = open columns x open rows.
  std::vector<int> open_cols, open_rows;
  for (int i = 1; i <= n; ++i) {
    if (per_col[i] < 2) open_cols.push_back(i);
    if (per_row[i] < 2) open_rows.push_back(i);
  }
  rep.u_size = static_cast<int>(open_cols.size() * open_rows.size());
  if (rep.u_size > 0) {
    rep.c = static_cast<int>(open_cols.size());
    rep.r = static_cast<int>(open_rows.size());
    rep.a = open_cols.front();
    rep.b = open_cols.back();
    rep.a_prime = open_rows.front();
    rep.b_prime = open_rows.back();
  }

  LineCounts counts(p);
  for (int id = 0; id < counts.index().size(); ++id) {
    const Line l = counts.index().line(id);
    if ((l.slope == Slope::D || l.slope == Slope::A) && counts.at_id(id) >= 2)
      ++rep.slope_pm1_lines_defined;
  }

  if (rep.u_size > 0 && *rep.a != *rep.b) {
    std::vector<Square> edge;
    for (int col : {*rep.a, *rep.b})
      for (int row : open_rows) edge.push_back({col, row});
    for (Square s : edge)
      if (p.contains(s)) ++rep.edge_queens;
    for (int i = 0; i < 2; ++i) {
      const Slope slope = i == 0 ? Slope::D : Slope::A;
      std::vector<Line> hit;
      for (Square s : edge) hit.push_back(line_of(slope, s));
      std::sort(hit.begin(), hit.end());
      for (auto it = hit.begin(); it != hit.end();) {
        auto end = std::upper_bound(it, hit.end(), *it);
        if (end - it >= 2 && counts[*it] >= 2) ++rep.pm1_lines_through_two_edge_squares[i];
        it = end;
      }
    }
  }

  rep.inequality_lhs = 2 * rep.r - 2 - std::min(rep.q_dd, 2);
  rep.inequality_rhs = 2 * n - rep.q - 2;
  return rep;
}

void conclude(AuditReport& rep) {
  const int n = rep.n;
  const int q = rep.q;
  if (n % 2 == 0 && q <= n - 1) {
    EvenCaseAnalysis e;
    e.q_dd_zero = rep.q_dd == 0;
    e.required_pm1_lines = e.q_dd_zero ? n : n - 1;
    e.available_pm1_lines = n - 2;
    e.contradiction = e.required_pm1_lines > e.available_pm1_lines;
    rep.even_case = e;
  }
  if (!rep.good) return;

  // 2c >= 2n - (q - q'') avoids the half.
  rep.cr_bound_holds = 2 * rep.c >= 2 * n - (q - rep.q_dd) && 2 * rep.r >= 2 * n - (q - rep.q_dd);
  if (rep.c <= 1 || rep.r <= 1) {
    rep.degenerate_bound_holds = q >= 2 * (n - 1);
  } else {
    rep.diagonal_count_holds = rep.slope_pm1_lines_defined >= rep.inequality_lhs;
    rep.chain_holds = rep.inequality_lhs >= rep.inequality_rhs;
    rep.q_at_least_n_minus_1 = q >= n - 1;
  }
  for (const auto& flag : {rep.cr_bound_holds, rep.degenerate_bound_holds,
                           rep.diagonal_count_holds, rep.chain_holds, rep.q_at_least_n_minus_1})
    if (flag && !*flag) rep.bound_holds = false;
}

}  // namespace

AuditReport audit(const Placement& p) {
  const auto report = verify(p);
  if (!report.no_three)
    throw InvalidPlacementError("placement already has three queens on " +
                                to_string(*report.violating_line));
  AuditReport rep = measure(p);
  if (rep.a && *rep.b - *rep.a < *rep.b_prime - *rep.a_prime) {
    rep = measure(rotate_quarter(p));
    rep.rotated = true;
  }
  rep.good = report.good;
  conclude(rep);
  return rep;
}

}  // namespace queens
