#include "queens/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace queens {

SparseBivariatePoly SparseBivariatePoly::constant(const BigInt& c) {
  SparseBivariatePoly p;
  p.add_term({0, 0}, c);
  return p;
}

SparseBivariatePoly SparseBivariatePoly::linear(const BigInt& a, const BigInt& b,
                                                const BigInt& c) {
  SparseBivariatePoly p;
  p.add_term({1, 0}, a);
  p.add_term({0, 1}, b);
  p.add_term({0, 0}, c);
  return p;
}

void SparseBivariatePoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int SparseBivariatePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BigInt SparseBivariatePoly::coefficient(int x_exp, int y_exp) const {
  auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt SparseBivariatePoly::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c * pow(x, e.first) * pow(y, e.second);
  return sum;
}

SparseBivariatePoly& SparseBivariatePoly::operator+=(const SparseBivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparseBivariatePoly operator*(const SparseBivariatePoly& a, const SparseBivariatePoly& b) {
  SparseBivariatePoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

std::string SparseBivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then higher x power first.
  std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second;
    const int dr = r.first.first + r.first.second;
    return dl != dr ? dl > dr : l.first.first > r.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool bare = e.first == 0 && e.second == 0;
    if (mag != 1 || bare) os << mag;
    auto var = [&](char v, int p) {
      if (p == 0) return;
      os << v;
      if (p > 1) os << '^' << p;
    };
    var('x', e.first);
    var('y', e.second);
  }
  return os.str();
}

SparseBivariatePoly line_form(const Line& l) {
  switch (l.slope) {
    case Slope::V: return SparseBivariatePoly::linear(1, 0, -l.offset);
    case Slope::H: return SparseBivariatePoly::linear(0, 1, -l.offset);
    case Slope::D: return SparseBivariatePoly::linear(1, -1, -l.offset);
    case Slope::A: return SparseBivariatePoly::linear(1, 1, -l.offset);
  }
  return {};
}

long long evaluate_line(const Line& l, Square s) {
  switch (l.slope) {
    case Slope::V: return s.x - l.offset;
    case Slope::H: return s.y - l.offset;
    case Slope::D: return s.x - s.y - l.offset;
    case Slope::A: return s.x + s.y - l.offset;
  }
  return 0;
}

SparseBivariatePoly line_polynomial(std::span<const Line> lines) {
  SparseBivariatePoly f = SparseBivariatePoly::constant(1);
  for (const Line& l : lines) f = f * line_form(l);
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace queens
