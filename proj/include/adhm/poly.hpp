#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adhm/matrix.hpp"
#include "adhm/rational.hpp"

namespace adhm {

// Dense univariate polynomial over Q, coefficients little-endian
// (coef[k] is the coefficient of t^k). Normalized: the zero polynomial has
// an empty coefficient vector, otherwise coef.back() != 0.
struct Poly {
  std::vector<Rational> coef;

  static Poly zero() { return {}; }
  static Poly constant(const Rational& value);

  bool is_zero() const { return coef.empty(); }
  int degree() const { return static_cast<int>(coef.size()) - 1; }
  const Rational& leading() const { return coef.back(); }
  Rational eval(const Rational& t) const;
  void normalize();

  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;
};

Poly operator+(const Poly& lhs, const Poly& rhs);
Poly operator-(const Poly& lhs, const Poly& rhs);
Poly operator*(const Poly& lhs, const Poly& rhs);
// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& divisor);
Poly derivative(const Poly& p);
// Monic gcd (gcd(0, 0) = 0).
Poly poly_gcd(Poly a, Poly b);

std::string format_poly(const Poly& p, const std::string& variable = "t");

// Characteristic polynomial det(t id - M), monic of degree M.rows(),
// computed by the Faddeev-LeVerrier trace recursion in exact arithmetic.
Poly char_poly(const Matrix& m);

// All rational roots with multiplicities (sorted ascending), plus the
// monic residue with no rational roots. Completeness: the input is made
// monic, converted to a monic integer polynomial by a denominator
// substitution, and integer root candidates are enumerated from the full
// divisor set of the constant term.
struct RationalRoots {
  std::vector<std::pair<Rational, std::size_t>> roots;
  Poly residue;
};

RationalRoots rational_roots(const Poly& p);

// Yun squarefree decomposition: returns (factor, multiplicity) pairs with
// p = lead * prod factor_k^mult_k, each factor monic squarefree, pairwise
// coprime, listed by increasing multiplicity.
std::vector<std::pair<Poly, std::size_t>> squarefree_factors(const Poly& p);

}  // namespace adhm
