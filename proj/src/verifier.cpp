#include "queens/verifier.hpp"

#include <algorithm>

#include "queens/errors.hpp"

namespace queens {

LineCounts::LineCounts(int n) : index_(n), counts_(index_.size(), 0) {}

LineCounts::LineCounts(const Placement& p) : LineCounts(p.side()) {
  for (Square s : p.queens()) add(s);
}

void LineCounts::add(Square s) {
  for (int id : index_.ids_through(s)) ++counts_[id];
}

void LineCounts::remove(Square s) {
  for (int id : index_.ids_through(s)) --counts_[id];
}

int LineCounts::max_through(Square s) const {
  int m = 0;
  for (int id : index_.ids_through(s)) m = std::max(m, counts_[id]);
  return m;
}

std::optional<Line> find_three_in_line(const Placement& p) {
  LineCounts counts(p);
  for (int id = 0; id < counts.index().size(); ++id)
    if (counts.at_id(id) >= 3) return counts.index().line(id);
  return std::nullopt;
}

bool has_three_in_line(const Placement& p) { return find_three_in_line(p).has_value(); }

namespace {

std::vector<Square> addable_given(const Placement& p, const LineCounts& counts) {
  std::vector<Square> out;
  const int n = p.side();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      Square s{x, y};
      if (!p.contains(s) && counts.max_through(s) <= 1) out.push_back(s);
    }
  return out;
}

}  // namespace

std::vector<Square> addable_squares(const Placement& p) {
  if (auto bad = find_three_in_line(p))
    throw InvalidPlacementError("placement already has three queens on " + to_string(*bad));
  return addable_given(p, LineCounts(p));
}

bool is_good(const Placement& p) { return verify(p).good; }

VerifyReport verify(const Placement& p) {
  VerifyReport r;
  r.violating_line = find_three_in_line(p);
  r.no_three = !r.violating_line;
  if (r.no_three) {
    r.addable = addable_given(p, LineCounts(p));
    r.good = r.addable.empty();
  }
  return r;
}

}  // namespace queens
