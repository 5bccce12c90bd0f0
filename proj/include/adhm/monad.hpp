#pragma once

#include <array>
#include <cstddef>

#include "adhm/datum.hpp"
#include "adhm/spectral.hpp"

namespace adhm {

// Point of the projective plane in homogeneous coordinates (x : y : z),
// not all zero.
struct PointP2 {
  Rational x;
  Rational y;
  Rational z;

  PointP2(Rational x, Rational y, Rational z);

  bool on_infinity() const { return z == 0; }
  bool proportional_to(const PointP2& other) const;
};

// Coefficient matrices of the two maps of the three-term complex attached
// to a datum:
//   alpha = alpha_x x + alpha_y y + alpha_z z : V -> V + V + W (per point),
//   beta  = beta_x x + beta_y y + beta_z z   : V + V + W -> V.
// Concretely alpha = (z A + x; z B + y; z J) and
// beta = (-z B - y | z A + x | z I), so beta alpha = z^2 (AB - BA + IJ)
// identically in (x, y, z).
struct MonadMatrices {
  std::size_t c = 0;
  std::size_t r = 0;
  Matrix alpha_x, alpha_y, alpha_z;  // (2c + r) x c
  Matrix beta_x, beta_y, beta_z;     // c x (2c + r)
};

MonadMatrices monad_matrices(const AdhmDatum& x);

Matrix alpha_at(const MonadMatrices& monad, const PointP2& point);
Matrix beta_at(const MonadMatrices& monad, const PointP2& point);

// Coefficient matrices of beta alpha on the ordered monomial basis
// x^2, xy, xz, y^2, yz, z^2. For any datum the first five vanish and the
// last equals mu(X).
std::array<Matrix, 6> monad_composition(const AdhmDatum& x);

// Ranks of the two maps at a point, and the fiberwise cohomology sizes of
// the complex. Requires a solution (so that im alpha lies in ker beta).
struct FiberReport {
  std::size_t rank_alpha = 0;
  std::size_t rank_beta = 0;
  std::size_t h0_fiber = 0;  // dim ker beta_P - rank alpha_P
  std::size_t h1_fiber = 0;  // c - rank beta_P
  bool alpha_injective = false;

  friend bool operator==(const FiberReport&, const FiberReport&) = default;
};

FiberReport evaluate_fiber(const AdhmDatum& x, const PointP2& point);

struct SupportReport {
  std::vector<SupportPoint> points;
  SpectralResidue residue;
};

// Points (never on the line at infinity) where alpha fails to be injective:
// the sign-flipped joint spectrum of (A, B) restricted to the largest
// invariant subspace inside ker J. Empty exactly when the datum is
// costable. Requires a solution.
SupportReport non_costable_locus(const AdhmDatum& x);

// Sign-flipped joint spectrum of the commuting pair induced on V / Sigma;
// multiplicities total c - s when the spectra are rational. Requires a
// solution.
SupportReport singular_support(const AdhmDatum& x);

// Dimension of the space of degree-d forms in x, y, z: (d+1)(d+2)/2, and 0
// for negative d.
std::size_t dim_forms(int d);

// Multiplication-by-beta on degree-n coefficient vectors:
//   (V + V + W) tensor S^n  ->  V tensor S^(n+1),
// monomials in degree-lex order with x > y > z, component index major.
Matrix beta_sections_matrix(const AdhmDatum& x, int n);

// Number of independent degree-n sections of the middle cohomology sheaf:
// dim ker(beta_n) - c * dim S^(n-1). Requires a solution and 0 <= n <= cap
// (the matrix has c * dim S^(n+1) rows, so the default cap keeps sizes
// sane; raise it explicitly if needed).
std::size_t h0_twisted(const AdhmDatum& x, int n, int cap = 8);

// (dim W, dim Sigma, codim Sigma) read as sheaf invariants of the complex;
// the length entry is cross-checked against the singular support
// multiplicity total whenever the quotient spectra are rational.
struct PerverseInvariants {
  std::size_t rank = 0;
  std::size_t charge = 0;
  std::size_t length = 0;

  friend bool operator==(const PerverseInvariants&, const PerverseInvariants&) = default;
};

PerverseInvariants perverse_invariants(const AdhmDatum& x);

// r * (n+1)(n+2)/2 - c; the twisted Euler characteristic of the complex.
long long euler_characteristic(const AdhmDatum& x, int n);

}  // namespace adhm
