#pragma once

#include <cstddef>
#include <vector>

#include "adhm/datum.hpp"
#include "adhm/poly.hpp"

namespace adhm {

// An affine point (p, q) carrying the dimension of the associated joint
// generalized eigenspace.
struct SupportPoint {
  Rational p;
  Rational q;
  std::size_t multiplicity = 0;

  friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
};

// Bookkeeping for the part of a spectrum that could not be split into
// rational eigenvalues: degrees of the squarefree factors of the offending
// characteristic polynomials, plus the total dimension mass they carry.
// mass = 0 means the spectrum was fully rational.
struct SpectralResidue {
  struct Factor {
    std::size_t degree = 0;
    std::size_t multiplicity = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
  };

  std::vector<Factor> factors;
  std::size_t mass = 0;

  bool empty() const { return mass == 0; }

  friend bool operator==(const SpectralResidue&, const SpectralResidue&) = default;
};

struct JointSpectrum {
  std::vector<SupportPoint> points;  // sorted by (p, q)
  SpectralResidue residue;
};

// Simultaneous spectral decomposition of a commuting pair: for each rational
// eigenvalue p of P and rational eigenvalue q of Q restricted to
// ker((P - p)^n), the point (p, q) is reported with multiplicity
// dim(ker((P - p)^n) cap ker((Q - q)^n)). Exponent n = pair size is always
// enough for generalized kernels. Multiplicities sum to n minus the residue
// mass.
JointSpectrum joint_spectrum(const CommutingPair& pair);

// Restriction of an endomorphism to an invariant subspace, in the
// coordinates of the given basis. Throws if the subspace is not invariant.
Matrix restrict_to(const Matrix& endomorphism, const Matrix& basis);

}  // namespace adhm
