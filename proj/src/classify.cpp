#include "adhm/classify.hpp"

#include <stdexcept>

namespace adhm {

Matrix jacobian(const AdhmDatum& x) {
  const std::size_t c = x.c;
  const std::size_t r = x.r;
  Matrix result(c * c, 2 * c * c + 2 * c * r);

  // Closed-form columns, from expanding the map on matrix units E_uv.
  // Output entry (p, q) sits in row p*c + q.
  const std::size_t a_off = 0;
  const std::size_t b_off = c * c;
  const std::size_t i_off = 2 * c * c;
  const std::size_t j_off = 2 * c * c + c * r;

  for (std::size_t p = 0; p < c; ++p) {
    for (std::size_t q = 0; q < c; ++q) {
      const std::size_t row = p * c + q;
      // [a, B]: a = E_uv contributes delta_pu B_vq - B_pu delta_qv.
      for (std::size_t v = 0; v < c; ++v) result.at(row, a_off + p * c + v) += x.B.at(v, q);
      for (std::size_t u = 0; u < c; ++u) result.at(row, a_off + u * c + q) -= x.B.at(p, u);
      // [A, b]: b = E_uv contributes A_pu delta_qv - delta_pu A_vq.
      for (std::size_t u = 0; u < c; ++u) result.at(row, b_off + u * c + q) += x.A.at(p, u);
      for (std::size_t v = 0; v < c; ++v) result.at(row, b_off + p * c + v) -= x.A.at(v, q);
      // i J: i = E_uv (c x r) contributes delta_pu J_vq.
      for (std::size_t v = 0; v < r; ++v) result.at(row, i_off + p * r + v) += x.J.at(v, q);
      // I j: j = E_uv (r x c) contributes I_pu delta_qv.
      for (std::size_t u = 0; u < r; ++u) result.at(row, j_off + u * c + q) += x.I.at(p, u);
    }
  }
  return result;
}

bool is_sj(const AdhmDatum& x) { return rank(jacobian(x)) == x.c * x.c; }

Subspace stabilizer_lie(const AdhmDatum& x) {
  const std::size_t c = x.c;
  const std::size_t r = x.r;
  // Rows stack the four outputs [A,y], [B,y], yI, Jy; columns are the c^2
  // entries of y, row-major.
  Matrix m(2 * c * c + 2 * c * r, c * c);
  const std::size_t ay_off = 0;
  const std::size_t by_off = c * c;
  const std::size_t yi_off = 2 * c * c;
  const std::size_t jy_off = 2 * c * c + c * r;

  for (std::size_t u = 0; u < c; ++u) {
    for (std::size_t v = 0; v < c; ++v) {
      const std::size_t col = u * c + v;
      // [A, y] with y = E_uv: entry (p, q) gets A_pu delta_qv - delta_pu A_vq.
      for (std::size_t p = 0; p < c; ++p) m.at(ay_off + p * c + v, col) += x.A.at(p, u);
      for (std::size_t q = 0; q < c; ++q) m.at(ay_off + u * c + q, col) -= x.A.at(v, q);
      for (std::size_t p = 0; p < c; ++p) m.at(by_off + p * c + v, col) += x.B.at(p, u);
      for (std::size_t q = 0; q < c; ++q) m.at(by_off + u * c + q, col) -= x.B.at(v, q);
      // y I with y = E_uv: entry (u, q) gets I_vq.
      for (std::size_t q = 0; q < r; ++q) m.at(yi_off + u * r + q, col) += x.I.at(v, q);
      // J y with y = E_uv: entry (p, v) gets J_pu.
      for (std::size_t p = 0; p < r; ++p) m.at(jy_off + p * c + v, col) += x.J.at(p, u);
    }
  }
  return Subspace::kernel(m);
}

std::optional<Matrix> stabilizer_nontrivial_witness(const AdhmDatum& x) {
  const Subspace lie = stabilizer_lie(x);
  if (lie.dim() == 0) return std::nullopt;

  const Matrix y = unvec(column(lie.basis, 0), x.c, x.c);
  for (long t = 1; t <= static_cast<long>(x.c) + 1; ++t) {
    const Matrix g = Matrix::identity(x.c) + Rational(t) * y;
    if (!is_invertible(g)) continue;
    if (!(group_action(g, x) == x)) {
      throw std::logic_error("stabilizer witness failed to fix the datum");
    }
    return g;
  }
  throw std::logic_error("stabilizer witness: no invertible id + t y found");
}

ClassificationReport classify(const AdhmDatum& x) {
  ClassificationReport report;
  report.is_solution = is_solution(x);
  report.sigma_dim = stabilizing_subspace(x).dim();
  report.upsilon_dim = costabilizing_subspace(x).dim();
  report.stable = report.sigma_dim == x.c;
  report.costable = report.upsilon_dim == 0;
  report.regular = report.stable && report.costable;
  report.jacobian_rank = rank(jacobian(x));
  report.sj = report.jacobian_rank == x.c * x.c;
  report.stabilizer_dim = stabilizer_lie(x).dim();
  report.ts = !stabilizer_nontrivial_witness(x).has_value();
  report.tangent_dim = 2 * x.c * x.c + 2 * x.r * x.c - report.jacobian_rank;
  return report;
}

}  // namespace adhm
