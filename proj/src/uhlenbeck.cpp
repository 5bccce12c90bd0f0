#include "adhm/uhlenbeck.hpp"

#include <stdexcept>

namespace adhm {

namespace {

// Same greedy completion used for the stabilizing-subspace block form.
Matrix complete_basis(const Matrix& basis) {
  const std::size_t c = basis.rows();
  Matrix cols = basis;
  for (std::size_t k = 0; k < c && cols.cols() < c; ++k) {
    Matrix e(c, 1);
    e.at(k, 0) = 1;
    Matrix candidate = hstack(cols, e);
    if (rank(candidate) == candidate.cols()) cols = candidate;
  }
  return cols;
}

}  // namespace

UhlenbeckImage uhlenbeck_image(const AdhmDatum& x) {
  if (!is_solution(x)) {
    throw std::invalid_argument("uhlenbeck_image: datum does not solve the equation");
  }
  if (!is_stable(x)) {
    throw std::invalid_argument("uhlenbeck_image: stable datum required");
  }

  const Subspace upsilon = costabilizing_subspace(x);
  const std::size_t k = upsilon.dim();
  const std::size_t regular_size = x.c - k;

  const Matrix p = complete_basis(upsilon.basis);
  const auto g = inverse(p);
  if (!g) throw std::logic_error("uhlenbeck_image: basis completion failed");
  const AdhmDatum y = group_action(*g, x);

  UhlenbeckImage out;
  out.cloud = CommutingPair(block(y.A, 0, 0, k, k), block(y.B, 0, 0, k, k));
  out.regular_part =
      AdhmDatum(regular_size, x.r, block(y.A, k, k, regular_size, regular_size),
                block(y.B, k, k, regular_size, regular_size),
                block(y.I, k, 0, regular_size, x.r), block(y.J, 0, k, x.r, regular_size));

  const JointSpectrum spectrum = joint_spectrum(out.cloud);
  out.points = spectrum.points;
  out.residue = spectrum.residue;
  return out;
}

UhlenbeckInvariants uhlenbeck_invariants(const UhlenbeckImage& image) {
  UhlenbeckInvariants out;
  out.r = image.regular_part.r;
  out.regular_size = image.regular_part.c;
  out.cloud_char_p = char_poly(image.cloud.P);
  out.cloud_char_q = char_poly(image.cloud.Q);
  return out;
}

}  // namespace adhm
