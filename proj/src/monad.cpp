#include "adhm/monad.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace adhm {

namespace {

void require_solution(const AdhmDatum& x, const char* where) {
  if (!is_solution(x)) {
    throw std::invalid_argument(std::string(where) + ": datum does not solve the equation");
  }
}

// Monomials of total degree d in (x, y, z), degree-lex with x > y > z:
// exponent triples sorted by x-exponent descending, then y descending.
// Position of (i, j, d-i-j) in that list: the (d-i)(d-i+1)/2 monomials with
// a larger x-exponent come first, then j counts down from d-i.
std::size_t monomial_index(int d, int i, int j) {
  return static_cast<std::size_t>((d - i) * (d - i + 1) / 2 + (d - i - j));
}

}  // namespace

PointP2::PointP2(Rational x_in, Rational y_in, Rational z_in)
    : x(std::move(x_in)), y(std::move(y_in)), z(std::move(z_in)) {
  if (x == 0 && y == 0 && z == 0) {
    throw std::invalid_argument("PointP2: coordinates must not all vanish");
  }
}

bool PointP2::proportional_to(const PointP2& other) const {
  return x * other.y == y * other.x && x * other.z == z * other.x &&
         y * other.z == z * other.y;
}

MonadMatrices monad_matrices(const AdhmDatum& x) {
  const std::size_t c = x.c;
  const std::size_t r = x.r;
  MonadMatrices m;
  m.c = c;
  m.r = r;

  m.alpha_x = Matrix(2 * c + r, c);
  m.alpha_y = Matrix(2 * c + r, c);
  m.alpha_z = Matrix(2 * c + r, c);
  set_block(m.alpha_x, 0, 0, Matrix::identity(c));
  set_block(m.alpha_y, c, 0, Matrix::identity(c));
  set_block(m.alpha_z, 0, 0, x.A);
  set_block(m.alpha_z, c, 0, x.B);
  set_block(m.alpha_z, 2 * c, 0, x.J);

  m.beta_x = Matrix(c, 2 * c + r);
  m.beta_y = Matrix(c, 2 * c + r);
  m.beta_z = Matrix(c, 2 * c + r);
  set_block(m.beta_x, 0, c, Matrix::identity(c));
  set_block(m.beta_y, 0, 0, -Matrix::identity(c));
  set_block(m.beta_z, 0, 0, -x.B);
  set_block(m.beta_z, 0, c, x.A);
  set_block(m.beta_z, 0, 2 * c, x.I);
  return m;
}

Matrix alpha_at(const MonadMatrices& monad, const PointP2& point) {
  return point.x * monad.alpha_x + point.y * monad.alpha_y + point.z * monad.alpha_z;
}

Matrix beta_at(const MonadMatrices& monad, const PointP2& point) {
  return point.x * monad.beta_x + point.y * monad.beta_y + point.z * monad.beta_z;
}

std::array<Matrix, 6> monad_composition(const AdhmDatum& x) {
  const MonadMatrices m = monad_matrices(x);
  return {
      m.beta_x * m.alpha_x,                          // x^2
      m.beta_x * m.alpha_y + m.beta_y * m.alpha_x,   // xy
      m.beta_x * m.alpha_z + m.beta_z * m.alpha_x,   // xz
      m.beta_y * m.alpha_y,                          // y^2
      m.beta_y * m.alpha_z + m.beta_z * m.alpha_y,   // yz
      m.beta_z * m.alpha_z,                          // z^2
  };
}

FiberReport evaluate_fiber(const AdhmDatum& x, const PointP2& point) {
  require_solution(x, "evaluate_fiber");
  const MonadMatrices m = monad_matrices(x);
  FiberReport report;
  report.rank_alpha = rank(alpha_at(m, point));
  report.rank_beta = rank(beta_at(m, point));
  report.h0_fiber = (2 * x.c + x.r - report.rank_beta) - report.rank_alpha;
  report.h1_fiber = x.c - report.rank_beta;
  report.alpha_injective = report.rank_alpha == x.c;
  return report;
}

namespace {

SupportReport flipped_spectrum(const CommutingPair& pair) {
  JointSpectrum spectrum = joint_spectrum(pair);
  SupportReport report;
  for (SupportPoint& point : spectrum.points) {
    report.points.push_back({-point.p, -point.q, point.multiplicity});
  }
  // Flipping signs reverses the sort order; restore it.
  std::sort(report.points.begin(), report.points.end(),
            [](const SupportPoint& a, const SupportPoint& b) {
              return a.p != b.p ? a.p < b.p : a.q < b.q;
            });
  report.residue = std::move(spectrum.residue);
  return report;
}

}  // namespace

SupportReport non_costable_locus(const AdhmDatum& x) {
  require_solution(x, "non_costable_locus");
  const Subspace upsilon = costabilizing_subspace(x);
  // A and B preserve Upsilon and commute there: [A, B] = -IJ vanishes on
  // ker J. A joint eigenvector v with values (p, q) kills alpha at the
  // point (-p : -q : 1).
  const CommutingPair restricted(restrict_to(x.A, upsilon.basis),
                                 restrict_to(x.B, upsilon.basis));
  return flipped_spectrum(restricted);
}

SupportReport singular_support(const AdhmDatum& x) {
  require_solution(x, "singular_support");
  return flipped_spectrum(quotient_representation(x));
}

std::size_t dim_forms(int d) {
  if (d < 0) return 0;
  return static_cast<std::size_t>((d + 1) * (d + 2) / 2);
}

Matrix beta_sections_matrix(const AdhmDatum& x, int n) {
  if (n < 0) throw std::invalid_argument("beta_sections_matrix: n >= 0 required");
  const MonadMatrices m = monad_matrices(x);
  const std::size_t c = x.c;
  const std::size_t width = 2 * c + x.r;
  const std::size_t dom_forms = dim_forms(n);
  const std::size_t cod_forms = dim_forms(n + 1);
  Matrix result(c * cod_forms, width * dom_forms);

  // Column (k, x^i y^j z^(n-i-j)) maps to the three monomial shifts of the
  // k-th component, weighted by the matching coefficient matrix.
  for (std::size_t k = 0; k < width; ++k) {
    for (int i = n; i >= 0; --i) {
      for (int j = n - i; j >= 0; --j) {
        const std::size_t col = k * dom_forms + monomial_index(n, i, j);
        for (std::size_t p = 0; p < c; ++p) {
          const Rational& cx = m.beta_x.at(p, k);
          const Rational& cy = m.beta_y.at(p, k);
          const Rational& cz = m.beta_z.at(p, k);
          if (cx != 0) {
            result.at(p * cod_forms + monomial_index(n + 1, i + 1, j), col) += cx;
          }
          if (cy != 0) {
            result.at(p * cod_forms + monomial_index(n + 1, i, j + 1), col) += cy;
          }
          if (cz != 0) {
            result.at(p * cod_forms + monomial_index(n + 1, i, j), col) += cz;
          }
        }
      }
    }
  }
  return result;
}

std::size_t h0_twisted(const AdhmDatum& x, int n, int cap) {
  require_solution(x, "h0_twisted");
  if (n < 0) throw std::invalid_argument("h0_twisted: n >= 0 required");
  if (n > cap) {
    throw std::invalid_argument("h0_twisted: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  }
  const Matrix beta_n = beta_sections_matrix(x, n);
  const std::size_t kernel_dim = beta_n.cols() - rank(beta_n);
  return kernel_dim - x.c * dim_forms(n - 1);
}

PerverseInvariants perverse_invariants(const AdhmDatum& x) {
  require_solution(x, "perverse_invariants");
  const TypeVector type = type_vector(x);
  PerverseInvariants out{type.r, type.s, type.l};

  const SupportReport support = singular_support(x);
  if (support.residue.empty()) {
    std::size_t total = 0;
    for (const SupportPoint& point : support.points) total += point.multiplicity;
    if (total != out.length) {
      throw std::logic_error("perverse_invariants: support multiplicities disagree with length");
    }
  }
  return out;
}

long long euler_characteristic(const AdhmDatum& x, int n) {
  const long long nl = n;
  return static_cast<long long>(x.r) * (nl + 1) * (nl + 2) / 2 - static_cast<long long>(x.c);
}

}  // namespace adhm
