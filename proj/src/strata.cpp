#include "adhm/strata.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace adhm {

namespace {

// Diagonal matrix with distinct integer entries drawn from a range wide
// enough that rejection terminates quickly.
Matrix distinct_diagonal(std::size_t n, Rng& rng) {
  Matrix d(n, n);
  std::unordered_set<long> used;
  const long span = 2 * static_cast<long>(n) + 5;
  for (std::size_t k = 0; k < n; ++k) {
    long value;
    do {
      value = rng.uniform_int(-span, span);
    } while (!used.insert(value).second);
    d.at(k, k) = Rational(value);
  }
  return d;
}

// Random polynomial in m of degree < n with coefficients in [-3, 3].
Matrix random_polynomial_in(const Matrix& m, Rng& rng) {
  const std::size_t n = m.rows();
  Matrix result(n, n);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    result += Rational(rng.uniform_int(-3, 3)) * power;
    power = power * m;
  }
  return result;
}

}  // namespace

CommutingPair sample_commuting(std::size_t n, Rng& rng) {
  const Matrix p = distinct_diagonal(n, rng);
  return CommutingPair(p, random_polynomial_in(p, rng));
}

AdhmDatum sample_stable(std::size_t r, std::size_t c, Rng& rng) {
  if (r < 1) throw std::invalid_argument("sample_stable: r >= 1 required");
  const Matrix a = distinct_diagonal(c, rng);
  const Matrix b = random_polynomial_in(a, rng);
  for (int attempt = 0; attempt < 100; ++attempt) {
    AdhmDatum x(c, r, a, b, random_matrix(c, r, 5, rng), Matrix(r, c));
    if (rank(r_map(x)) == c) return x;
  }
  throw std::runtime_error("sample_stable: retry cap exceeded");
}

Matrix fiber_map(const AdhmDatum& x1, const CommutingPair& q) {
  if (!is_stable(x1)) throw std::invalid_argument("fiber_map: stable datum required");
  const std::size_t s = x1.c;
  const std::size_t r = x1.r;
  const std::size_t m = q.size();
  Matrix result(s * m, 2 * s * m + r * m);
  const std::size_t a_off = 0;
  const std::size_t b_off = s * m;
  const std::size_t j_off = 2 * s * m;

  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t row = p * m + t;
      // a B3 - B1 a with a = E_uv: delta_pu (B3)_vt - (B1)_pu delta_tv.
      for (std::size_t v = 0; v < m; ++v) result.at(row, a_off + p * m + v) += q.Q.at(v, t);
      for (std::size_t u = 0; u < s; ++u) result.at(row, a_off + u * m + t) -= x1.B.at(p, u);
      // A1 b - b A3 with b = E_uv: (A1)_pu delta_tv - delta_pu (A3)_vt.
      for (std::size_t u = 0; u < s; ++u) result.at(row, b_off + u * m + t) += x1.A.at(p, u);
      for (std::size_t v = 0; v < m; ++v) result.at(row, b_off + p * m + v) -= q.P.at(v, t);
      // I1 j with j = E_uv: (I1)_pu delta_tv.
      for (std::size_t u = 0; u < r; ++u) result.at(row, j_off + u * m + t) += x1.I.at(p, u);
    }
  }
  return result;
}

StratumSample sample_stratum(std::size_t r, std::size_t c, std::size_t s, Rng& rng) {
  if (r < 1) throw std::invalid_argument("sample_stratum: r >= 1 required");
  if (s > c) throw std::invalid_argument("sample_stratum: s <= c required");
  const std::size_t m = c - s;

  const AdhmDatum x1 = sample_stable(r, s, rng);
  const CommutingPair pair = sample_commuting(m, rng);

  // Random element of the solution set of the middle block constraint:
  // integer combination of a kernel basis of the fiber map.
  const Matrix kernel = kernel_basis(fiber_map(x1, pair));
  Matrix coords(kernel.cols(), 1);
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    coords.at(k, 0) = Rational(rng.uniform_int(-5, 5));
  }
  const Matrix solution_vec = kernel * coords;
  const Matrix a2 = unvec(block(solution_vec, 0, 0, s * m, 1), s, m);
  const Matrix b2 = unvec(block(solution_vec, s * m, 0, s * m, 1), s, m);
  const Matrix j2 = unvec(block(solution_vec, 2 * s * m, 0, r * m, 1), r, m);

  Matrix a(c, c), b(c, c), i(c, r), j(r, c);
  set_block(a, 0, 0, x1.A);
  set_block(a, 0, s, a2);
  set_block(a, s, s, pair.P);
  set_block(b, 0, 0, x1.B);
  set_block(b, 0, s, b2);
  set_block(b, s, s, pair.Q);
  set_block(i, 0, 0, x1.I);
  set_block(j, 0, 0, x1.J);
  set_block(j, 0, s, j2);
  return {AdhmDatum(c, r, a, b, i, j), s};
}

DimensionAudit stratum_dimension(std::size_t r, std::size_t c, std::size_t s) {
  if (s > c) throw std::invalid_argument("stratum_dimension: s <= c required");
  DimensionAudit out;
  out.r = r;
  out.c = c;
  out.s = s;
  const long long rl = static_cast<long long>(r);
  const long long cl = static_cast<long long>(c);
  const long long sl = static_cast<long long>(s);
  const long long ml = cl - sl;
  out.formula = 2 * rl * cl + cl * cl - (rl - 1) * ml;
  // Grassmannian of s-planes, stable piece of size (r, s), commuting pair of
  // size m, and the fiber of the middle block constraint.
  out.parametrization = sl * ml + (2 * rl * sl + sl * sl) + (ml + ml * ml) + (rl + sl) * ml;
  out.consistent = out.formula == out.parametrization;
  return out;
}

std::vector<DimensionAudit> audit_dimensions(std::size_t rmax, std::size_t cmax) {
  std::vector<DimensionAudit> out;
  for (std::size_t r = 1; r <= rmax; ++r) {
    for (std::size_t c = 0; c <= cmax; ++c) {
      for (std::size_t s = 0; s <= c; ++s) out.push_back(stratum_dimension(r, c, s));
    }
  }
  return out;
}

}  // namespace adhm
