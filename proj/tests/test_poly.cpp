#include <doctest.h>

#include <cstddef>
#include <vector>

#include "adhm/poly.hpp"

using namespace adhm;

namespace {

Poly make_poly(std::initializer_list<int> little_endian) {
  Poly p;
  for (int c : little_endian) p.coef.emplace_back(c);
  p.normalize();
  return p;
}

// t - root
Poly linear(const Rational& root) {
  Poly p;
  p.coef = {-root, Rational(1)};
  return p;
}

Matrix diagonal(std::initializer_list<int> entries) {
  Matrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (int e : entries) {
    m.at(i, i) = Rational(e);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("arithmetic and normalization") {
  const Poly p = make_poly({1, 2});       // 1 + 2t
  const Poly q = make_poly({-1, 0, 3});   // -1 + 3t^2
  CHECK((p + q) == make_poly({0, 2, 3}));
  CHECK((p * q) == make_poly({-1, -2, 3, 6}));
  CHECK((p - p).is_zero());
  CHECK(make_poly({5}).degree() == 0);
  CHECK(Poly::zero().degree() == -1);
  CHECK(p.eval(Rational(3)) == Rational(7));
  CHECK(derivative(q) == make_poly({0, 6}));
}

TEST_CASE("euclidean division") {
  const Poly n = make_poly({1, 0, 2, 1});  // 1 + 2t^2 + t^3
  const Poly d = make_poly({1, 1});        // 1 + t
  const auto [quotient, remainder] = divmod(n, d);
  CHECK(quotient * d + remainder == n);
  CHECK(remainder.degree() < d.degree());
  CHECK_THROWS(divmod(n, Poly::zero()));
}

TEST_CASE("monic gcd") {
  const Poly a = linear(Rational(1)) * linear(Rational(2));
  const Poly b = linear(Rational(2)) * linear(Rational(3));
  CHECK(poly_gcd(a, b) == linear(Rational(2)));
  CHECK(poly_gcd(a, Poly::zero()) == linear(Rational(1)) * linear(Rational(2)));
  CHECK(poly_gcd(Poly::zero(), Poly::zero()).is_zero());
  // gcd is normalized monic even when inputs are not.
  const Poly scaled = make_poly({-4, 2});  // 2(t - 2)
  CHECK(poly_gcd(scaled, scaled) == linear(Rational(2)));
}

TEST_CASE("characteristic polynomials of model matrices") {
  CHECK(char_poly(diagonal({1, 2, 3})) ==
        linear(Rational(1)) * linear(Rational(2)) * linear(Rational(3)));

  // Companion matrix of t^2 + 3t + 5.
  Matrix companion(2, 2);
  companion.at(0, 1) = Rational(-5);
  companion.at(1, 0) = Rational(1);
  companion.at(1, 1) = Rational(-3);
  CHECK(char_poly(companion) == make_poly({5, 3, 1}));

  // Jordan block at 2 of size 3.
  Matrix jordan = diagonal({2, 2, 2});
  jordan.at(0, 1) = 1;
  jordan.at(1, 2) = 1;
  const Poly cube = linear(Rational(2)) * linear(Rational(2)) * linear(Rational(2));
  CHECK(char_poly(jordan) == cube);

  CHECK(char_poly(Matrix(0, 0)) == make_poly({1}));
  CHECK(format_poly(make_poly({-2, 0, 1})) == "t^2 - 2");
}

TEST_CASE("rational roots with multiplicities and residue") {
  const Poly half = linear(Rational(1, 2));
  const Poly p = half * half * linear(Rational(-3)) * make_poly({-2, 0, 1});
  const RationalRoots roots = rational_roots(p);
  REQUIRE(roots.roots.size() == 2);
  CHECK(roots.roots[0].first == Rational(-3));
  CHECK(roots.roots[0].second == 1);
  CHECK(roots.roots[1].first == Rational(1, 2));
  CHECK(roots.roots[1].second == 2);
  CHECK(roots.residue == make_poly({-2, 0, 1}));  // t^2 - 2 has no rational roots
}

TEST_CASE("rational roots survive large prime constant terms") {
  // Both roots prime and beyond the trial-division range, so candidate
  // enumeration has to factor a ~10^12 constant term.
  const Poly p = linear(Rational(1000003)) * linear(Rational(999983));
  const RationalRoots roots = rational_roots(p);
  REQUIRE(roots.roots.size() == 2);
  CHECK(roots.roots[0].first == Rational(999983));
  CHECK(roots.roots[1].first == Rational(1000003));
  CHECK(roots.residue == make_poly({1}));
}

TEST_CASE("rational roots of non-monic and fractional inputs") {
  // 6(t - 1/2)(t - 1/3) = 6t^2 - 5t + 1
  const Poly p = make_poly({1, -5, 6});
  const RationalRoots roots = rational_roots(p);
  REQUIRE(roots.roots.size() == 2);
  CHECK(roots.roots[0].first == Rational(1, 3));
  CHECK(roots.roots[1].first == Rational(1, 2));
  CHECK(rational_roots(Poly::constant(Rational(7))).roots.empty());
  CHECK(rational_roots(make_poly({0, 1})).roots.size() == 1);  // t = 0
}

TEST_CASE("squarefree decomposition") {
  const Poly p = linear(Rational(1)) * linear(Rational(1)) * make_poly({1, 0, 1});
  const auto factors = squarefree_factors(p);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].first == make_poly({1, 0, 1}));
  CHECK(factors[0].second == 1);
  CHECK(factors[1].first == linear(Rational(1)));
  CHECK(factors[1].second == 2);

  // Reconstruction: lead * prod factor^mult.
  Poly rebuilt = Poly::constant(p.leading());
  for (const auto& [factor, mult] : factors) {
    for (std::size_t k = 0; k < mult; ++k) rebuilt = rebuilt * factor;
  }
  CHECK(rebuilt == p);
  CHECK(squarefree_factors(Poly::constant(Rational(3))).empty());
}
