#include <random>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "queens/errors.hpp"
#include "queens/nullstellensatz.hpp"
#include "queens/search.hpp"
#include "queens/verifier.hpp"

using namespace queens;

namespace {

// All invariants a certificate for p must satisfy, checked from scratch.
void check_refutation(const Placement& p) {
  CAPTURE(p.side());
  CAPTURE(p.size());
  const CnCertificate cert = refute_goodness(p);
  const LinePlan& plan = cert.plan;
  const int n = p.side();
  const int q_iso = cert.q_isolated;

  CHECK(cert.coefficient != 0);
  CHECK(check_certificate(cert, p).empty());

  // The witness is the least square avoiding every line, and is addable.
  const auto add = oracle::addable(p);
  CHECK(std::find(add.begin(), add.end(), cert.witness) != add.end());
  const auto lines = plan.lines();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const Square s{x, y};
      if (s >= cert.witness) continue;
      CHECK(std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return l.contains(s); }));
    }

  // Type 1 and type 2 factors vanish on every queen.
  for (Square s : p.queens()) {
    bool hit = false;
    for (const Line& l : plan.type1) hit = hit || evaluate_line(l, s) == 0;
    for (const auto& t : plan.type2) hit = hit || evaluate_line(t.line, s) == 0;
    CHECK(hit);
  }
  // Padding lines miss the board.
  for (const Line& l : plan.type3) CHECK_FALSE(meets_board(l, n));

  // Per-slope line counts against the bound and the targets.
  const PerSlope forced = plan.forced_counts();
  const int bound = line_count_bound(n, q_iso);
  for (Slope s : kSlopes) {
    CHECK(forced[slot(s)] <= bound);
    CHECK(forced[slot(s)] <= plan.targets[slot(s)]);
    if (q_iso != 1 || s == Slope::V || n % 4 == 1) CHECK(bound <= plan.targets[slot(s)]);
  }
  CHECK(plan.t1 < n);
  CHECK(plan.t2 < n);
  CHECK(plan.t1 + plan.t2 == static_cast<int>(lines.size()));

  // Coefficient against the binomial-sum oracle on the top-degree part.
  PerSlope c{};
  for (const Line& l : lines) ++c[slot(l.slope)];
  CHECK(cert.coefficient == oracle::top_coefficient(c[0], c[1], c[2], c[3], plan.t1, plan.t2));
}

Placement random_sub_bound(std::mt19937_64& rng, int n) {
  for (;;) {
    const int q = static_cast<int>(rng() % lower_bound(n));
    std::vector<Square> sq;
    while (static_cast<int>(sq.size()) < q) {
      Square s{1 + static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % n)};
      if (std::find(sq.begin(), sq.end(), s) == sq.end()) sq.push_back(s);
    }
    Placement p(n, sq);
    if (!has_three_in_line(p)) return p;
  }
}

}  // namespace

TEST_CASE("defined_lines") {
  using V = std::vector<Line>;
  CHECK(defined_lines(Placement(5, {{1, 1}, {1, 2}})) == V{{Slope::V, 1}});
  CHECK(defined_lines(Placement(5, {{1, 1}, {2, 2}})) == V{{Slope::D, 0}});
  CHECK(defined_lines(Placement(5, {{1, 1}, {2, 3}})).empty());
}

TEST_CASE("isolated_queens") {
  using V = std::vector<Square>;
  CHECK(isolated_queens(Placement(5, {{1, 1}, {1, 2}})).empty());
  CHECK(isolated_queens(Placement(5, {{1, 1}, {2, 3}})) == V{{1, 1}, {2, 3}});
}

TEST_CASE("good placements on the 4x4 board with one isolated queen") {
  // Brute-force counts: none at size 4, four at size 7, the only size where
  // such placements occur.
  SearchConfig c;
  c.symmetry_reduction = false;
  std::map<int, int> with_one;
  for (int q = 4; q <= 8; ++q)
    for_each_good(4, q, c, [&](const Placement& p) {
      if (isolated_queens(p).size() == 1) ++with_one[q];
    });
  CHECK(with_one == std::map<int, int>{{7, 4}});
  const Placement seven(4, {{1, 1}, {2, 3}, {2, 4}, {3, 2}, {3, 4}, {4, 2}, {4, 3}});
  CHECK(is_good(seven));
  CHECK(isolated_queens(seven) == std::vector<Square>{{1, 1}});
}

TEST_CASE("plan for the 5x5 example") {
  const Placement p(5, {{1, 1}, {1, 2}, {2, 4}, {4, 2}});
  const LinePlan plan = plan_line_set(p);
  CHECK(plan.type1 == std::vector<Line>{{Slope::H, 2}, {Slope::V, 1}, {Slope::A, 6}});
  CHECK(plan.type2.empty());
  CHECK(plan.targets == PerSlope{2, 2, 2, 2});
  CHECK(plan.type3.size() == 5);
  CHECK(plan.t1 == 4);
  CHECK(plan.t2 == 4);
  const auto f = line_polynomial(plan.lines());
  CHECK(f.degree() == 8);
  // Binomial-sum oracle: (-1)^1 * C(2,1).
  CHECK(oracle::top_coefficient(2, 2, 2, 2, 4, 4) == -2);
  CHECK(f.coefficient(4, 4) == -2);
}

TEST_CASE("plan for the empty 5x5 placement is all padding") {
  const LinePlan plan = plan_line_set(Placement(5));
  CHECK(plan.type1.empty());
  CHECK(plan.type2.empty());
  CHECK(plan.type3.size() == 8);
  CHECK(plan.t1 == 4);
  CHECK(plan.t2 == 4);
}

TEST_CASE("single isolated queen on the 4x4 board") {
  // (4,3) shares no line with (1,1) or (1,2).
  const Placement p(4, {{1, 1}, {1, 2}, {4, 3}});
  REQUIRE(isolated_queens(p) == std::vector<Square>{{4, 3}});
  const LinePlan plan = plan_line_set(p);
  REQUIRE(plan.type2.size() == 1);
  CHECK(plan.type2[0].line == Line{Slope::V, 4});
  CHECK(plan.targets == PerSlope{1, 2, 1, 1});
  CHECK(plan.t1 == 2);
  CHECK(plan.t2 == 3);
  CHECK(line_polynomial(plan.lines()).coefficient(2, 3) == -1);
}

TEST_CASE("isolated queens get slopes 0, +1, -1, infinity in turn") {
  // Four queens pairwise off every common line.
  const Placement p(9, {{1, 1}, {2, 3}, {3, 6}, {5, 2}});
  REQUIRE(isolated_queens(p).size() == 4);
  const LinePlan plan = plan_line_set(p);
  REQUIRE(plan.type2.size() == 4);
  CHECK(plan.type2[0].line.slope == Slope::H);
  CHECK(plan.type2[1].line.slope == Slope::D);
  CHECK(plan.type2[2].line.slope == Slope::A);
  CHECK(plan.type2[3].line.slope == Slope::V);
}

TEST_CASE("plan shapes by residue") {
  for (int n = 1; n <= 40; ++n)
    for (int q_iso : {0, 1, 2, 3, 5}) {
      const PlanShape s = plan_shape(n, q_iso);
      const int total = s.targets[0] + s.targets[1] + s.targets[2] + s.targets[3];
      CAPTURE(n);
      CAPTURE(q_iso);
      CHECK(s.t1 + s.t2 == total);
      CHECK(s.t1 <= n - 1);
      CHECK(s.t2 <= n - 1);
      CHECK(oracle::top_coefficient(s.targets[0], s.targets[1], s.targets[2], s.targets[3], s.t1,
                                    s.t2) != 0);
    }
}

TEST_CASE("refute_goodness examples") {
  const Placement five(5, {{1, 1}, {1, 2}, {2, 4}, {4, 2}});
  const CnCertificate cert = refute_goodness(five);
  CHECK(cert.witness == addable_squares(five).front());
  CHECK(cert.coefficient == -2);
  check_refutation(five);

  const Placement four(4, {{1, 1}, {2, 3}, {3, 2}});
  const CnCertificate c4 = refute_goodness(four);
  const auto add = addable_squares(four);
  CHECK(std::find(add.begin(), add.end(), c4.witness) != add.end());
  check_refutation(four);

  CHECK_THROWS_AS(refute_goodness(Placement(5, {{1, 1}, {2, 3}, {3, 5}, {4, 2}, {5, 4}})),
                  BoundNotApplicableError);
  CHECK_THROWS_AS(plan_line_set(full_board(2)), BoundNotApplicableError);
  CHECK_THROWS_AS(refute_goodness(Placement(5, {{1, 1}, {2, 1}, {3, 1}})), InvalidPlacementError);
}

TEST_CASE("refutation of every small placement below the bound") {
  for (int n = 1; n <= 5; ++n)
    oracle::for_each_subset(n, lower_bound(n) - 1, [&](const Placement& p) {
      if (!oracle::three_in_line(oracle::squares_of(p))) check_refutation(p);
    });
}

TEST_CASE("refutation of random placements up to n = 11") {
  std::mt19937_64 rng(42);
  for (int n = 6; n <= 11; ++n) {
    int single_isolated = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const Placement p = random_sub_bound(rng, n);
      single_isolated += isolated_queens(p).size() == 1;
      check_refutation(p);
    }
    // Two queens sharing a column plus one queen off all their lines.
    Placement one(n, {{1, 1}, {1, 2}, {n, 4}});
    REQUIRE(isolated_queens(one).size() == 1);
    check_refutation(one);
  }
}

TEST_CASE("balanced and single-isolated coefficient formulas for k = 1..4") {
  for (int k = 1; k <= 4; ++k) {
    const auto balanced = line_polynomial(plan_line_set(Placement(4 * k + 1)).lines());
    const BigInt expect = (k % 2 ? -1 : 1) * binomial(2 * k, k);
    CHECK(balanced.coefficient(4 * k, 4 * k) == expect);

    const int n = 4 * k;
    const Placement lone(n, {{1, 1}});
    const LinePlan plan = plan_line_set(lone);
    CHECK(plan.t1 == 4 * k - 2);
    CHECK(plan.t2 == 4 * k - 1);
    CHECK(line_polynomial(plan.lines()).coefficient(4 * k - 2, 4 * k - 1) ==
          (k % 2 ? -1 : 1) * binomial(2 * k - 1, k));
  }
}

TEST_CASE("check_certificate rejects tampering") {
  const Placement p(5, {{1, 1}, {1, 2}, {2, 4}, {4, 2}});
  const CnCertificate good = refute_goodness(p);

  CnCertificate c = good;
  c.coefficient += 1;
  CHECK_FALSE(check_certificate(c, p).empty());

  c = good;
  c.witness = {1, 1};
  CHECK_FALSE(check_certificate(c, p).empty());

  c = good;
  c.plan.type3.pop_back();
  CHECK_FALSE(check_certificate(c, p).empty());

  c = good;
  c.plan.t1 = 5;
  c.plan.t2 = 3;
  CHECK_FALSE(check_certificate(c, p).empty());

  c = good;
  c.plan.type1.erase(c.plan.type1.begin());
  CHECK_FALSE(check_certificate(c, p).empty());
}
