#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "queens/board.hpp"

namespace queens {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in x, y with arbitrary-precision integer coefficients.
// Terms are keyed by (x exponent, y exponent); zero coefficients are never
// stored.
class SparseBivariatePoly {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, BigInt>;

  SparseBivariatePoly() = default;
  static SparseBivariatePoly constant(const BigInt& c);
  // a*x + b*y + c
  static SparseBivariatePoly linear(const BigInt& a, const BigInt& b, const BigInt& c);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const;
  [[nodiscard]] BigInt coefficient(int x_exp, int y_exp) const;
  [[nodiscard]] BigInt evaluate(const BigInt& x, const BigInt& y) const;

  SparseBivariatePoly& operator+=(const SparseBivariatePoly& o);
  friend SparseBivariatePoly operator*(const SparseBivariatePoly& a, const SparseBivariatePoly& b);
  friend bool operator==(const SparseBivariatePoly&, const SparseBivariatePoly&) = default;

  // e.g. "x^2 - y^2"
  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  Terms terms_;
};

// The linear form vanishing exactly on `l`:
//   V a -> x - a,  H b -> y - b,  D g -> x - y - g,  A d -> x + y - d.
SparseBivariatePoly line_form(const Line& l);

// Value of line_form(l) at s, without building the polynomial.
long long evaluate_line(const Line& l, Square s);

// Expanded product of the line forms; the empty product is 1.
SparseBivariatePoly line_polynomial(std::span<const Line> lines);

BigInt binomial(int n, int k);

}  // namespace queens
