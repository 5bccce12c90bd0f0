#pragma once

#include <cstddef>
#include <vector>

#include "adhm/datum.hpp"
#include "adhm/poly.hpp"
#include "adhm/spectral.hpp"

namespace adhm {

// Splitting of a stable solution along the costabilizing subspace Upsilon:
// in a basis whose first dim Upsilon vectors span Upsilon, (A, B) become
// block upper-triangular, J kills the top block and I feeds the bottom one.
// The top pair is a commuting "point cloud" of size c - s'; the bottom
// datum of size s' is both stable and costable.
struct UhlenbeckImage {
  AdhmDatum regular_part;            // size (r, s')
  CommutingPair cloud;               // size c - s'
  std::vector<SupportPoint> points;  // joint spectrum of the cloud, if rational
  SpectralResidue residue;
};

// Requires mu(X) = 0 and X stable.
UhlenbeckImage uhlenbeck_image(const AdhmDatum& x);

// Conjugation-invariant fingerprint of the image: framing size, regular
// part size, and the characteristic polynomials of the cloud pair.
struct UhlenbeckInvariants {
  std::size_t r = 0;
  std::size_t regular_size = 0;
  Poly cloud_char_p;
  Poly cloud_char_q;

  friend bool operator==(const UhlenbeckInvariants&, const UhlenbeckInvariants&) = default;
};

UhlenbeckInvariants uhlenbeck_invariants(const UhlenbeckImage& image);

}  // namespace adhm
