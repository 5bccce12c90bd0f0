#include "adhm/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace adhm {

namespace {

void append_residue_factors(const Poly& residue, SpectralResidue& out) {
  if (residue.degree() < 1) return;
  for (const auto& [factor, multiplicity] : squarefree_factors(residue)) {
    out.factors.push_back({static_cast<std::size_t>(factor.degree()), multiplicity});
  }
}

}  // namespace

Matrix restrict_to(const Matrix& endomorphism, const Matrix& basis) {
  const auto solved = solve(basis, endomorphism * basis);
  if (!solved) {
    throw std::invalid_argument("restrict_to: subspace is not invariant");
  }
  return *solved;
}

JointSpectrum joint_spectrum(const CommutingPair& pair) {
  JointSpectrum out;
  const std::size_t n = pair.size();
  if (n == 0) return out;

  const Matrix id = Matrix::identity(n);
  const RationalRoots p_roots = rational_roots(char_poly(pair.P));
  append_residue_factors(p_roots.residue, out.residue);

  std::size_t accounted = 0;
  for (const auto& [p_value, p_mult] : p_roots.roots) {
    const Matrix p_kernel = kernel_basis(pow(pair.P - p_value * id, n));
    // Q preserves the generalized eigenspace because the pair commutes,
    // so its restriction there is well-defined.
    const Matrix q_restricted = restrict_to(pair.Q, p_kernel);
    const RationalRoots q_roots = rational_roots(char_poly(q_restricted));
    append_residue_factors(q_roots.residue, out.residue);

    for (const auto& [q_value, q_mult] : q_roots.roots) {
      const Matrix joint =
          kernel_basis(vstack(pow(pair.P - p_value * id, n), pow(pair.Q - q_value * id, n)));
      out.points.push_back({p_value, q_value, joint.cols()});
      accounted += joint.cols();
    }
  }

  out.residue.mass = n - accounted;
  std::sort(out.points.begin(), out.points.end(), [](const SupportPoint& a, const SupportPoint& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  });
  return out;
}

}  // namespace adhm
