#include <doctest.h>

#include <cstddef>
#include <stdexcept>

#include "adhm/io.hpp"
#include "adhm/monad.hpp"
#include "adhm/strata.hpp"

using namespace adhm;

namespace {

AdhmDatum one_point() {
  return parse_datum(R"({"c":1,"r":1,"A":[["0"]],"B":[["0"]],"I":[["1"]],"J":[["0"]]})");
}

}  // namespace

TEST_CASE("points of the plane") {
  CHECK_THROWS_AS(PointP2(Rational(0), Rational(0), Rational(0)), std::invalid_argument);
  const PointP2 p(Rational(1), Rational(2), Rational(1));
  const PointP2 q(Rational(2), Rational(4), Rational(2));
  const PointP2 infinity(Rational(1), Rational(0), Rational(0));
  CHECK(p.proportional_to(q));
  CHECK(!p.proportional_to(infinity));
  CHECK(infinity.on_infinity());
  CHECK(!p.on_infinity());
}

TEST_CASE("composition vanishes in the first five coefficients for any datum") {
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t c = 3, r = 2;
    // Deliberately not a solution: the identity is about the shape of the
    // two maps, not about the quadratic equation.
    const AdhmDatum x(c, r, random_matrix(c, c, 4, rng), random_matrix(c, c, 4, rng),
                      random_matrix(c, r, 4, rng), random_matrix(r, c, 4, rng));
    const auto coefficients = monad_composition(x);
    for (std::size_t k = 0; k + 1 < coefficients.size(); ++k) {
      CHECK(coefficients[k].is_zero());
    }
    CHECK(coefficients.back() == mu(x));
  }
}

TEST_CASE("evaluation matches the coefficient matrices") {
  Rng rng(52);
  const AdhmDatum x = sample_stable(2, 3, rng);
  const MonadMatrices monad = monad_matrices(x);
  const PointP2 point(Rational(2), Rational(-1), Rational(3));
  const Matrix alpha = alpha_at(monad, point);
  const Matrix beta = beta_at(monad, point);
  CHECK(alpha == Rational(2) * monad.alpha_x + Rational(-1) * monad.alpha_y +
                     Rational(3) * monad.alpha_z);
  CHECK(beta == Rational(2) * monad.beta_x + Rational(-1) * monad.beta_y +
                    Rational(3) * monad.beta_z);
  CHECK((beta * alpha).is_zero());
}

TEST_CASE("fiber report of the basic one-point datum") {
  const AdhmDatum x = one_point();

  const FiberReport generic = evaluate_fiber(x, PointP2(Rational(1), Rational(2), Rational(1)));
  CHECK(generic.alpha_injective);
  CHECK(generic.rank_alpha == 1);
  CHECK(generic.rank_beta == 1);
  CHECK(generic.h0_fiber == 1);
  CHECK(generic.h1_fiber == 0);

  // At the supported point alpha vanishes and the fiber jumps.
  const FiberReport special = evaluate_fiber(x, PointP2(Rational(0), Rational(0), Rational(1)));
  CHECK(!special.alpha_injective);
  CHECK(special.rank_alpha == 0);
  CHECK(special.h0_fiber == 2);
  CHECK(special.h1_fiber == 0);
}

TEST_CASE("non costable locus carries sign-flipped eigenvalues") {
  const AdhmDatum x = parse_datum(
      R"({"c":1,"r":1,"A":[["2"]],"B":[["3"]],"I":[["1"]],"J":[["0"]]})");
  const SupportReport report = non_costable_locus(x);
  REQUIRE(report.points.size() == 1);
  CHECK(report.points[0].p == Rational(-2));
  CHECK(report.points[0].q == Rational(-3));
  CHECK(report.points[0].multiplicity == 1);
  CHECK(report.residue.empty());

  // The reported point is exactly where alpha drops rank.
  const FiberReport at_point =
      evaluate_fiber(x, PointP2(report.points[0].p, report.points[0].q, Rational(1)));
  CHECK(!at_point.alpha_injective);
}

TEST_CASE("locus is empty exactly for costable data") {
  Rng rng(53);
  const AdhmDatum x = sample_stable(2, 3, rng);  // J = 0, never costable for c > 0
  CHECK(!is_costable(x));
  const SupportReport report = non_costable_locus(x);
  std::size_t total = 0;
  for (const SupportPoint& point : report.points) {
    total += point.multiplicity;
    const FiberReport at_point =
        evaluate_fiber(x, PointP2(point.p, point.q, Rational(1)));
    CHECK(!at_point.alpha_injective);
  }
  CHECK(total + report.residue.mass == 3);

  const AdhmDatum dual = star(x);  // costable mirror
  CHECK(is_costable(dual));
  CHECK(non_costable_locus(dual).points.empty());
  CHECK(non_costable_locus(dual).residue.empty());
}

TEST_CASE("alpha stays injective along the line at infinity") {
  Rng rng(54);
  for (std::size_t s = 0; s <= 3; ++s) {
    const AdhmDatum x = sample_stratum(2, 3, s, rng).x;
    for (int k = -2; k <= 2; ++k) {
      const FiberReport report =
          evaluate_fiber(x, PointP2(Rational(1), Rational(k), Rational(0)));
      CHECK(report.alpha_injective);
    }
    const FiberReport vertical =
        evaluate_fiber(x, PointP2(Rational(0), Rational(1), Rational(0)));
    CHECK(vertical.alpha_injective);
  }
}

TEST_CASE("generic fibers have rank r and no higher cohomology") {
  Rng rng(59);
  for (std::size_t s = 0; s <= 3; ++s) {
    const AdhmDatum x = sample_stratum(2, 3, s, rng).x;
    const SupportReport alpha_locus = non_costable_locus(x);
    const SupportReport beta_locus = singular_support(x);
    const auto on_either = [&](const Rational& p, const Rational& q) {
      for (const SupportPoint& point : alpha_locus.points) {
        if (point.p == p && point.q == q) return true;
      }
      for (const SupportPoint& point : beta_locus.points) {
        if (point.p == p && point.q == q) return true;
      }
      return false;
    };
    int tested = 0;
    while (tested < 10) {
      const Rational p(rng.uniform_int(-20, 20));
      const Rational q(rng.uniform_int(-20, 20));
      if (on_either(p, q)) continue;
      const FiberReport fiber = evaluate_fiber(x, PointP2(p, q, Rational(1)));
      CHECK(fiber.h0_fiber == 2);  // = r
      CHECK(fiber.h1_fiber == 0);
      CHECK(fiber.alpha_injective);
      ++tested;
    }
  }
}

TEST_CASE("singular support counts the quotient with multiplicity") {
  Rng rng(55);
  for (std::size_t s = 0; s <= 3; ++s) {
    const AdhmDatum x = sample_stratum(2, 3, s, rng).x;
    const SupportReport report = singular_support(x);
    CHECK(report.residue.empty());  // sampled quotients have rational spectra
    std::size_t total = 0;
    for (const SupportPoint& point : report.points) total += point.multiplicity;
    CHECK(total == 3 - s);
  }
}

TEST_CASE("nilpotent quotient pair gives one fat point") {
  // A is a size-2 nilpotent Jordan block, everything else zero: the whole
  // space is the quotient and the support is the origin with multiplicity 2.
  AdhmDatum x(2, 1, Matrix(2, 2), Matrix(2, 2), Matrix(2, 1), Matrix(1, 2));
  x.A.at(0, 1) = 1;
  const SupportReport report = singular_support(x);
  REQUIRE(report.points.size() == 1);
  CHECK(report.points[0].p == Rational(0));
  CHECK(report.points[0].q == Rational(0));
  CHECK(report.points[0].multiplicity == 2);
  CHECK(report.residue.empty());
}

TEST_CASE("form space dimensions") {
  CHECK(dim_forms(-1) == 0);
  CHECK(dim_forms(0) == 1);
  CHECK(dim_forms(1) == 3);
  CHECK(dim_forms(2) == 6);
  CHECK(dim_forms(3) == 10);
}

TEST_CASE("twisted section counts of the one-point datum") {
  const AdhmDatum x = one_point();
  CHECK(h0_twisted(x, 0) == 0);
  CHECK(h0_twisted(x, 1) == 2);
  CHECK(h0_twisted(x, 2) == 5);
  CHECK(euler_characteristic(x, 1) == 2);  // matches h0 when nothing higher survives
  CHECK_THROWS_AS(h0_twisted(x, 9), std::invalid_argument);   // above the default cap
  CHECK_THROWS_AS(h0_twisted(x, -1), std::invalid_argument);  // negative twists unsupported
  CHECK(h0_twisted(x, 3, 3) == 9);
}

TEST_CASE("beta sections matrix shape") {
  Rng rng(56);
  const AdhmDatum x = sample_stable(2, 2, rng);
  const Matrix m = beta_sections_matrix(x, 1);
  CHECK(m.rows() == 2 * dim_forms(2));
  CHECK(m.cols() == (2 * 2 + 2) * dim_forms(1));
}

TEST_CASE("sheaf invariants read off the type vector") {
  Rng rng(57);
  for (std::size_t s = 0; s <= 3; ++s) {
    const AdhmDatum x = sample_stratum(2, 3, s, rng).x;
    const PerverseInvariants invariants = perverse_invariants(x);
    CHECK(invariants.rank == 2);
    CHECK(invariants.charge == s);
    CHECK(invariants.length == 3 - s);
  }
}

TEST_CASE("euler characteristic formula") {
  Rng rng(58);
  const AdhmDatum x = sample_stratum(3, 2, 1, rng).x;
  CHECK(euler_characteristic(x, 0) == 3 * 1 - 2);
  CHECK(euler_characteristic(x, 1) == 3 * 3 - 2);
  CHECK(euler_characteristic(x, 2) == 3 * 6 - 2);
}
