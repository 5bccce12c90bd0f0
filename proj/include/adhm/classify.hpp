#pragma once

#include <cstddef>
#include <optional>

#include "adhm/datum.hpp"

namespace adhm {

// Derivative of the moment map at X, as a matrix acting on the direction
// (a, b, i, j) |-> [A, b] + [a, B] + I j + i J. Rows are the c^2 entries of
// the output (row-major); columns are the directions in block order
// (a, b, i, j), each block row-major over its own shape.
Matrix jacobian(const AdhmDatum& x);

// Full rank c^2, i.e. the derivative is surjective.
bool is_sj(const AdhmDatum& x);

// Kernel of y |-> ([A, y], [B, y], y I, J y) inside End(V), i.e. the Lie
// algebra of the stabilizer of X. Vectors are row-major flattenings of y.
Subspace stabilizer_lie(const AdhmDatum& x);

// A non-identity g with g . X = X, if one exists: take a nonzero y from the
// stabilizer Lie algebra and return g = id + t y for the first
// t = 1, 2, 3, ... making g invertible (at most c can fail, since
// det(id + t y) is a degree <= c polynomial in t with value 1 at t = 0).
// The fixed-point identity g . X = X is re-verified before returning.
std::optional<Matrix> stabilizer_nontrivial_witness(const AdhmDatum& x);

struct ClassificationReport {
  bool is_solution = false;
  bool stable = false;
  bool costable = false;
  bool regular = false;
  bool sj = false;  // surjective moment-map derivative
  bool ts = false;  // trivial stabilizer (no witness found)
  std::size_t sigma_dim = 0;
  std::size_t upsilon_dim = 0;
  std::size_t stabilizer_dim = 0;
  std::size_t jacobian_rank = 0;
  std::size_t tangent_dim = 0;  // 2c^2 + 2rc - jacobian_rank

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify(const AdhmDatum& x);

}  // namespace adhm
