#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "queens/board.hpp"
#include "queens/errors.hpp"

using namespace queens;

TEST_CASE("lines_through lists one line per slope") {
  using L = std::array<Line, 4>;
  CHECK(lines_through({2, 2}, 3) ==
        L{Line{Slope::H, 2}, Line{Slope::V, 2}, Line{Slope::D, 0}, Line{Slope::A, 4}});
  CHECK(lines_through({1, 1}, 8) ==
        L{Line{Slope::H, 1}, Line{Slope::V, 1}, Line{Slope::D, 0}, Line{Slope::A, 2}});
  CHECK(lines_through({4, 8}, 8) ==
        L{Line{Slope::H, 8}, Line{Slope::V, 4}, Line{Slope::D, -4}, Line{Slope::A, 12}});
  CHECK_THROWS_AS(lines_through({0, 1}, 3), RangeError);
  CHECK_THROWS_AS(lines_through({4, 1}, 3), RangeError);
}

TEST_CASE("line_squares") {
  using V = std::vector<Square>;
  CHECK(line_squares({Slope::H, 2}, 3) == V{{1, 2}, {2, 2}, {3, 2}});
  CHECK(line_squares({Slope::D, 0}, 3) == V{{1, 1}, {2, 2}, {3, 3}});
  CHECK(line_squares({Slope::A, 2}, 5) == V{{1, 1}});
  CHECK(line_squares({Slope::A, 10}, 5) == V{{5, 5}});
  CHECK(line_squares({Slope::D, -4}, 5) == V{{1, 5}});
  CHECK_THROWS_AS(line_squares({Slope::A, 1}, 5), EmptyIntersectionError);
  CHECK_THROWS_AS(line_squares({Slope::D, 5}, 5), EmptyIntersectionError);
  CHECK_THROWS_AS(line_squares({Slope::V, 6}, 5), EmptyIntersectionError);
}

TEST_CASE("line_squares is exactly the squares satisfying the equation") {
  for (int n = 1; n <= 7; ++n)
    for (const Line& l : all_lines(n)) {
      std::vector<Square> expect;
      for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
          if (l.contains({x, y})) expect.push_back({x, y});
      CHECK(line_squares(l, n) == expect);
    }
}

TEST_CASE("count_attacked") {
  // Values from the brute-force enumeration over the board.
  CHECK(count_attacked(3, {2, 2}) == 8);
  CHECK(count_attacked(3, {1, 1}) == 6);
  CHECK(count_attacked(1, {1, 1}) == 0);
  CHECK_THROWS_AS(count_attacked(3, {3, 4}), RangeError);
}

TEST_CASE("count_attacked bounds, line decomposition and line total for n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    const auto lines = all_lines(n);
    CHECK(lines.size() == static_cast<std::size_t>(6 * n - 2));
    CHECK(std::set<Line>(lines.begin(), lines.end()).size() == lines.size());
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        const Square s{x, y};
        int brute = 0;
        for (int u = 1; u <= n; ++u)
          for (int v = 1; v <= n; ++v)
            if (Square{u, v} != s &&
                (u == x || v == y || u - v == x - y || u + v == x + y))
              ++brute;
        int via_lines = 0;
        for (const Line& l : lines_through(s, n))
          via_lines += static_cast<int>(line_squares(l, n).size()) - 1;
        const int c = count_attacked(n, s);
        CHECK(c == brute);
        CHECK(c == via_lines);
        if (n >= 2) {
          CHECK(c >= 3 * n - 3);
          CHECK(c <= 4 * n - 4);
        }
      }
  }
}

TEST_CASE("LineIndex numbers the 6n-2 lines densely") {
  for (int n = 1; n <= 11; ++n) {
    LineIndex idx(n);
    std::set<int> ids;
    for (const Line& l : all_lines(n)) {
      const int id = idx.id(l);
      CHECK(id >= 0);
      CHECK(id < idx.size());
      CHECK(idx.line(id) == l);
      ids.insert(id);
    }
    CHECK(static_cast<int>(ids.size()) == 6 * n - 2);
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        auto through = lines_through({x, y}, n);
        auto fast = idx.ids_through({x, y});
        for (int i = 0; i < 4; ++i) CHECK(fast[i] == idx.id(through[i]));
      }
  }
}

TEST_CASE("Placement validation") {
  CHECK_THROWS_AS(Placement(0), RangeError);
  CHECK_THROWS_AS(Placement(3, {{1, 1}, {4, 1}}), RangeError);
  CHECK_THROWS_AS(Placement(3, {{1, 1}, {1, 1}}), DuplicateSquareError);
  Placement p(3, {{3, 1}, {1, 2}});
  CHECK(p.size() == 2);
  CHECK(p.queens()[0] == Square{1, 2});
  CHECK(p.contains({3, 1}));
  CHECK_FALSE(p.contains({1, 1}));
}

TEST_CASE("symmetries form the dihedral group") {
  const int n = 5;
  std::set<std::vector<Square>> images;
  const Square probe1{1, 2}, probe2{4, 5};
  for (int g = 0; g < kSymmetryCount; ++g)
    images.insert({apply_symmetry(g, probe1, n), apply_symmetry(g, probe2, n)});
  CHECK(images.size() == 8);
  CHECK(apply_symmetry(0, probe1, n) == probe1);
  // Four quarter turns are the identity.
  Square s = probe1;
  for (int i = 0; i < 4; ++i) s = apply_symmetry(1, s, n);
  CHECK(s == probe1);
}

TEST_CASE("canonical_form") {
  CHECK(canonical_form(full_board(2)) == full_board(2));
  for (int n = 1; n <= 6; ++n)
    CHECK(canonical_form(Placement(n, {{n, n}})) == Placement(n, {{1, 1}}));
  // Least of the 8 images, enumerated by hand.
  CHECK(canonical_form(Placement(3, {{1, 2}, {3, 1}})) == Placement(3, {{1, 1}, {2, 3}}));
}

TEST_CASE("canonical_form is idempotent and constant on orbits") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Placement p = oracle::random_placement(rng, n, 0.3);
    const Placement c = canonical_form(p);
    CHECK(canonical_form(c) == c);
    CHECK(c <= p);
    for (int g = 0; g < kSymmetryCount; ++g) CHECK(canonical_form(apply_symmetry(g, p)) == c);
  }
}
