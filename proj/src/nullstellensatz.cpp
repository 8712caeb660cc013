#include "queens/nullstellensatz.hpp"

#include <algorithm>
#include <set>

#include "queens/errors.hpp"
#include "queens/search.hpp"
#include "queens/verifier.hpp"

namespace queens {

namespace {

// Slope given to the i-th isolated queen: 0, +1, -1, infinity in turn.
constexpr std::array<Slope, 4> kRoundRobin = {Slope::H, Slope::D, Slope::A, Slope::V};

void require_sub_bound(const Placement& p) {
  const int bound = lower_bound(p.side());
  if (p.size() >= bound)
    throw BoundNotApplicableError(std::to_string(p.size()) + " queens is not below the bound " +
                                  std::to_string(bound) + " for n = " + std::to_string(p.side()));
}

// k-th padding line of the slope, chosen to miss the board.
Line padding_line(Slope s, int n, int k) {
  switch (s) {
    case Slope::H:
    case Slope::V: return {s, n + 1 + k};
    case Slope::D: return {s, n + k};
    case Slope::A: return {s, 2 * n + 1 + k};
  }
  return {};
}

}  // namespace

std::vector<Line> LinePlan::lines() const {
  std::vector<Line> out = type1;
  for (const auto& t : type2) out.push_back(t.line);
  out.insert(out.end(), type3.begin(), type3.end());
  return out;
}

PerSlope LinePlan::forced_counts() const {
  PerSlope c{};
  for (const Line& l : type1) ++c[slot(l.slope)];
  for (const auto& t : type2) ++c[slot(t.line.slope)];
  return c;
}

std::vector<Line> defined_lines(const Placement& p) {
  LineCounts counts(p);
  std::vector<Line> out;
  for (int id = 0; id < counts.index().size(); ++id)
    if (counts.at_id(id) >= 2) out.push_back(counts.index().line(id));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Square> isolated_queens(const Placement& p) {
  LineCounts counts(p);
  std::vector<Square> out;
  for (Square s : p.queens())
    if (counts.max_through(s) <= 1) out.push_back(s);
  return out;
}

PlanShape plan_shape(int n, int q_isolated) {
  require_side(n);
  PlanShape shape;
  switch (n % 4) {
    case 1: {
      const int k = (n - 1) / 4;
      shape.targets = {2 * k, 2 * k, 2 * k, 2 * k};
      shape.t1 = shape.t2 = 4 * k;
      break;
    }
    case 0: {
      const int k = n / 4;
      shape.targets = {2 * k - 1, 2 * k - 1, 2 * k - 1, 2 * k - 1};
      if (q_isolated == 1) {
        shape.targets[slot(Slope::V)] = 2 * k;
        shape.t1 = 4 * k - 2;
        shape.t2 = 4 * k - 1;
      } else {
        shape.t1 = 4 * k - 1;
        shape.t2 = 4 * k - 3;
      }
      break;
    }
    default: {  // n = 4k+2 or 4k+3
      const int k = (n - 2) / 4;
      shape.targets = {2 * k, 2 * k, 2 * k, 2 * k};
      shape.t1 = shape.t2 = 4 * k;
      if (q_isolated == 1) {
        shape.targets[slot(Slope::V)] = 2 * k + 1;
        shape.t1 = 4 * k + 1;
      }
      break;
    }
  }
  return shape;
}

int line_count_bound(int n, int q_isolated) {
  const int max_q = lower_bound(n) - 1;
  return (max_q - q_isolated) / 2 + (q_isolated + 3) / 4;
}

LinePlan plan_line_set(const Placement& p) {
  require_sub_bound(p);
  const int n = p.side();

  LinePlan plan;
  plan.type1 = defined_lines(p);
  const auto isolated = isolated_queens(p);
  const int q_iso = static_cast<int>(isolated.size());
  for (int i = 0; i < q_iso; ++i) {
    const Slope s = q_iso == 1 && n % 4 != 1 ? Slope::V : kRoundRobin[i % 4];
    plan.type2.push_back({line_of(s, isolated[i]), isolated[i]});
  }

  const PlanShape shape = plan_shape(n, q_iso);
  plan.targets = shape.targets;
  plan.t1 = shape.t1;
  plan.t2 = shape.t2;

  const PerSlope forced = plan.forced_counts();
  for (Slope s : kSlopes) {
    const int missing = plan.targets[slot(s)] - forced[slot(s)];
    if (missing < 0)
      throw PlannerError("slope " + std::string(slope_name(s)) + " needs " +
                         std::to_string(forced[slot(s)]) + " lines but the target is " +
                         std::to_string(plan.targets[slot(s)]));
    for (int k = 0; k < missing; ++k) plan.type3.push_back(padding_line(s, n, k));
  }

  const auto all = plan.lines();
  if (std::set<Line>(all.begin(), all.end()).size() != all.size())
    throw PlannerError("plan lines are not pairwise distinct");
  if (plan.t1 > n - 1 || plan.t2 > n - 1 || plan.t1 + plan.t2 != static_cast<int>(all.size()))
    throw PlannerError("target monomial does not fit the board");
  if (line_polynomial(all).coefficient(plan.t1, plan.t2) == 0)
    throw PlannerError("target coefficient vanished");
  return plan;
}

CnCertificate refute_goodness(const Placement& p) {
  require_sub_bound(p);
  if (auto bad = find_three_in_line(p))
    throw InvalidPlacementError("placement already has three queens on " + to_string(*bad));

  CnCertificate cert;
  cert.n = p.side();
  cert.q = p.size();
  cert.plan = plan_line_set(p);
  cert.q_isolated = static_cast<int>(cert.plan.type2.size());
  const auto lines = cert.plan.lines();
  cert.coefficient = line_polynomial(lines).coefficient(cert.plan.t1, cert.plan.t2);

  // f is a product of linear factors, so it is nonzero exactly where no
  // factor vanishes.
  for (int x = 1; x <= cert.n; ++x)
    for (int y = 1; y <= cert.n; ++y) {
      const Square s{x, y};
      if (std::none_of(lines.begin(), lines.end(),
                       [&](const Line& l) { return evaluate_line(l, s) == 0; })) {
        cert.witness = s;
        return cert;
      }
    }
  throw PlannerError("no grid point avoids the plan although its coefficient is nonzero");
}

std::string check_certificate(const CnCertificate& cert, const Placement& p) {
  const int n = p.side();
  if (cert.n != n || cert.q != p.size()) return "board side or queen count mismatch";
  if (p.size() >= lower_bound(n)) return "placement is not below the bound";
  if (has_three_in_line(p)) return "placement has three in a line";

  const LinePlan& plan = cert.plan;
  if (plan.type1 != defined_lines(p)) return "type 1 lines differ from the defined lines";
  const auto isolated = isolated_queens(p);
  if (static_cast<int>(isolated.size()) != cert.q_isolated ||
      plan.type2.size() != isolated.size())
    return "isolated queen count mismatch";
  for (std::size_t i = 0; i < isolated.size(); ++i)
    if (plan.type2[i].queen != isolated[i] || !plan.type2[i].line.contains(isolated[i]))
      return "type 2 line does not pass through its isolated queen";

  const auto lines = plan.lines();
  if (std::set<Line>(lines.begin(), lines.end()).size() != lines.size())
    return "plan lines are not pairwise distinct";
  PerSlope per_slope{};
  for (const Line& l : lines) ++per_slope[slot(l.slope)];
  if (per_slope != plan.targets) return "per-slope line counts differ from the targets";
  if (plan.t1 >= n || plan.t2 >= n || plan.t1 < 0 || plan.t2 < 0)
    return "target exponents do not fit the board";

  const SparseBivariatePoly f = line_polynomial(lines);
  if (f.degree() != plan.t1 + plan.t2) return "degree differs from t1 + t2";
  const BigInt c = f.coefficient(plan.t1, plan.t2);
  if (c == 0) return "target coefficient is zero";
  if (c != cert.coefficient) return "stored coefficient differs from the expansion";

  if (!in_range(cert.witness, n)) return "witness is off the board";
  if (f.evaluate(cert.witness.x, cert.witness.y) == 0) return "f vanishes at the witness";
  if (p.contains(cert.witness)) return "witness is occupied";
  return {};
}

}  // namespace queens
