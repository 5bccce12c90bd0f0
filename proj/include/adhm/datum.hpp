#pragma once

#include <cstddef>

#include "adhm/matrix.hpp"

namespace adhm {

// A linear-algebra datum (A, B, I, J): two endomorphisms of a c-dimensional
// space V together with maps in from and out to an r-dimensional framing
// space W. Everything downstream (classification, stratification, the sheaf
// complex) is computed from these four matrices.
struct AdhmDatum {
  std::size_t c = 0;
  std::size_t r = 0;
  Matrix A;  // c x c
  Matrix B;  // c x c
  Matrix I;  // c x r
  Matrix J;  // r x c

  AdhmDatum() = default;
  AdhmDatum(std::size_t c, std::size_t r, Matrix a, Matrix b, Matrix i, Matrix j);

  friend bool operator==(const AdhmDatum& lhs, const AdhmDatum& rhs) = default;
};

// Throws std::invalid_argument naming the offending field if the four
// matrices do not have the shapes promised by (c, r).
void validate_shapes(const AdhmDatum& x);

// The moment-map value [A, B] + IJ; the datum solves the equation when this
// vanishes.
Matrix mu(const AdhmDatum& x);
bool is_solution(const AdhmDatum& x);

// Basis change g . X = (g A g^-1, g B g^-1, g I, J g^-1). Throws if g is not
// an invertible c x c matrix.
AdhmDatum group_action(const Matrix& g, const AdhmDatum& x);

// The dual datum (B^t, -A^t, J^t, -I^t). Applying it twice gives -X, and it
// swaps the two stability conditions below.
AdhmDatum star(const AdhmDatum& x);

// c x (r c^2) matrix whose column blocks are A^k B^l I for 0 <= k, l < c,
// ordered k-major: (k,l) = (0,0), (0,1), ..., (0,c-1), (1,0), ...
// Its column space is the span of everything reachable from im I by
// monomials of that shape; on solutions this equals the full closure below.
Matrix r_map(const AdhmDatum& x);

// Smallest A,B-invariant subspace containing im I, by iterated closure
// S <- S + A S + B S starting from the column space of I (at most c steps).
Subspace stabilizing_subspace(const AdhmDatum& x);

// Largest A,B-invariant subspace contained in ker J, by the dual iteration
// T <- T cap A^-1(T) cap B^-1(T) starting from ker J.
Subspace costabilizing_subspace(const AdhmDatum& x);

// Stable: no proper invariant subspace contains im I. Costable: no nonzero
// invariant subspace sits inside ker J. Regular: both.
bool is_stable(const AdhmDatum& x);
bool is_costable(const AdhmDatum& x);
bool is_regular(const AdhmDatum& x);

// A pair of commuting square matrices; the constructor rejects
// non-commuting input.
struct CommutingPair {
  Matrix P;
  Matrix Q;

  CommutingPair() = default;
  CommutingPair(Matrix p, Matrix q);

  std::size_t size() const { return P.rows(); }

  friend bool operator==(const CommutingPair& lhs, const CommutingPair& rhs) = default;
};

// Reads a commuting pair as a datum with empty framing (r = 0).
AdhmDatum datum_from_pair(const CommutingPair& pair);

// Basis adapted to the stabilizing subspace: conjugating X by g puts the
// first s = dim Sigma coordinates on Sigma, so A and B become block
// upper-triangular, I is supported in the top block and J splits as
// (J1 | J2). The named blocks are those of g . X.
struct BlockForm {
  Matrix g;
  std::size_t s = 0;
  Matrix A1, A2, A3;
  Matrix B1, B2, B3;
  Matrix I1;
  Matrix J1, J2;
};

BlockForm block_form(const AdhmDatum& x);

// The size-(r, s) datum (A1, B1, I1, J1) cut out by the adapted basis; it is
// stable by construction.
AdhmDatum stable_restriction(const AdhmDatum& x);

// The commuting pair (A3, B3) induced on V / Sigma. Requires mu(X) = 0,
// which is exactly what makes the quotient blocks commute.
CommutingPair quotient_representation(const AdhmDatum& x);

// (dim W, dim Sigma, codim Sigma); the last two entries always sum to c.
struct TypeVector {
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t l = 0;

  friend bool operator==(const TypeVector& lhs, const TypeVector& rhs) = default;
};

TypeVector type_vector(const AdhmDatum& x);

// Checks the intertwining identities f A = A' f, f B = B' f, f I = I' g,
// g J = J' f for f: V -> V' (c' x c) and g: W -> W' (r' x r).
bool is_morphism(const Matrix& f, const Matrix& g, const AdhmDatum& x, const AdhmDatum& y);

}  // namespace adhm
