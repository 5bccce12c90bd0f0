#include "adhm/datum.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace adhm {

namespace {

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(std::string("datum field \"") + name + "\": expected " +
                                std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Completes the columns of `basis` (assumed independent) to an invertible
// c x c matrix by greedily appending standard basis vectors that raise the
// rank. Deterministic: candidates are tried in index order.
Matrix complete_basis(const Matrix& basis) {
  const std::size_t c = basis.rows();
  Matrix cols = basis;
  for (std::size_t k = 0; k < c && cols.cols() < c; ++k) {
    Matrix e(c, 1);
    e.at(k, 0) = 1;
    Matrix candidate = hstack(cols, e);
    if (rank(candidate) == candidate.cols()) cols = std::move(candidate);
  }
  return cols;
}

}  // namespace

AdhmDatum::AdhmDatum(std::size_t c, std::size_t r, Matrix a, Matrix b, Matrix i, Matrix j)
    : c(c), r(r), A(std::move(a)), B(std::move(b)), I(std::move(i)), J(std::move(j)) {
  validate_shapes(*this);
}

void validate_shapes(const AdhmDatum& x) {
  check_shape(x.A, x.c, x.c, "A");
  check_shape(x.B, x.c, x.c, "B");
  check_shape(x.I, x.c, x.r, "I");
  check_shape(x.J, x.r, x.c, "J");
}

Matrix mu(const AdhmDatum& x) { return x.A * x.B - x.B * x.A + x.I * x.J; }

bool is_solution(const AdhmDatum& x) { return mu(x).is_zero(); }

AdhmDatum group_action(const Matrix& g, const AdhmDatum& x) {
  if (g.rows() != x.c || g.cols() != x.c) {
    throw std::invalid_argument("group_action: g must be c x c");
  }
  const auto g_inv = inverse(g);
  if (!g_inv) throw std::invalid_argument("group_action: g is singular");
  return AdhmDatum(x.c, x.r, g * x.A * *g_inv, g * x.B * *g_inv, g * x.I, x.J * *g_inv);
}

AdhmDatum star(const AdhmDatum& x) {
  return AdhmDatum(x.c, x.r, x.B.transpose(), -x.A.transpose(), x.J.transpose(),
                   -x.I.transpose());
}

Matrix r_map(const AdhmDatum& x) {
  const std::size_t c = x.c;
  Matrix result(c, x.r * c * c);
  // Precompute powers once; the block at (k, l) is A^k B^l I.
  std::vector<Matrix> a_pow(c), b_pow(c);
  for (std::size_t k = 0; k < c; ++k) {
    a_pow[k] = (k == 0) ? Matrix::identity(c) : a_pow[k - 1] * x.A;
    b_pow[k] = (k == 0) ? Matrix::identity(c) : b_pow[k - 1] * x.B;
  }
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t l = 0; l < c; ++l) {
      set_block(result, 0, (k * c + l) * x.r, a_pow[k] * (b_pow[l] * x.I));
    }
  }
  return result;
}

Subspace stabilizing_subspace(const AdhmDatum& x) {
  Subspace current = Subspace::column_space(x.I);
  while (true) {
    Subspace next =
        Subspace::column_space(hstack(hstack(current.basis, x.A * current.basis), x.B * current.basis));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace costabilizing_subspace(const AdhmDatum& x) {
  // Work with annihilator rows: T = ker N. Preimages of a kernel under A
  // and B are kernels of N A and N B, so one intersection step is just a
  // vertical stack. N starts as J itself (T0 = ker J).
  Matrix n = x.J;
  Subspace current = Subspace::kernel(n);
  while (true) {
    n = current.annihilator();
    const Subspace next = Subspace::kernel(vstack(vstack(n, n * x.A), n * x.B));
    if (next.dim() == current.dim()) return current;
    current = next;
  }
}

bool is_stable(const AdhmDatum& x) { return stabilizing_subspace(x).dim() == x.c; }

bool is_costable(const AdhmDatum& x) { return costabilizing_subspace(x).dim() == 0; }

bool is_regular(const AdhmDatum& x) { return is_stable(x) && is_costable(x); }

CommutingPair::CommutingPair(Matrix p, Matrix q) : P(std::move(p)), Q(std::move(q)) {
  if (!P.is_square() || P.rows() != Q.rows() || !Q.is_square()) {
    throw std::invalid_argument("CommutingPair: matrices must be square of equal size");
  }
  if (!(P * Q - Q * P).is_zero()) {
    throw std::invalid_argument("CommutingPair: matrices do not commute");
  }
}

AdhmDatum datum_from_pair(const CommutingPair& pair) {
  const std::size_t n = pair.size();
  return AdhmDatum(n, 0, pair.P, pair.Q, Matrix(n, 0), Matrix(0, n));
}

BlockForm block_form(const AdhmDatum& x) {
  const Subspace sigma = stabilizing_subspace(x);
  const std::size_t s = sigma.dim();
  const Matrix p = complete_basis(sigma.basis);
  const auto g = inverse(p);
  if (!g) throw std::logic_error("block_form: basis completion failed");

  const AdhmDatum y = group_action(*g, x);
  BlockForm out;
  out.g = *g;
  out.s = s;
  out.A1 = block(y.A, 0, 0, s, s);
  out.A2 = block(y.A, 0, s, s, x.c - s);
  out.A3 = block(y.A, s, s, x.c - s, x.c - s);
  out.B1 = block(y.B, 0, 0, s, s);
  out.B2 = block(y.B, 0, s, s, x.c - s);
  out.B3 = block(y.B, s, s, x.c - s, x.c - s);
  out.I1 = block(y.I, 0, 0, s, x.r);
  out.J1 = block(y.J, 0, 0, x.r, s);
  out.J2 = block(y.J, 0, s, x.r, x.c - s);
  return out;
}

AdhmDatum stable_restriction(const AdhmDatum& x) {
  const BlockForm form = block_form(x);
  return AdhmDatum(form.s, x.r, form.A1, form.B1, form.I1, form.J1);
}

CommutingPair quotient_representation(const AdhmDatum& x) {
  if (!is_solution(x)) {
    throw std::invalid_argument("quotient_representation: datum does not solve the equation");
  }
  const BlockForm form = block_form(x);
  return CommutingPair(form.A3, form.B3);
}

TypeVector type_vector(const AdhmDatum& x) {
  const std::size_t s = stabilizing_subspace(x).dim();
  return TypeVector{x.r, s, x.c - s};
}

bool is_morphism(const Matrix& f, const Matrix& g, const AdhmDatum& x, const AdhmDatum& y) {
  if (f.rows() != y.c || f.cols() != x.c) {
    throw std::invalid_argument("is_morphism: f must be c' x c");
  }
  if (g.rows() != y.r || g.cols() != x.r) {
    throw std::invalid_argument("is_morphism: g must be r' x r");
  }
  return f * x.A == y.A * f && f * x.B == y.B * f && f * x.I == y.I * g && g * x.J == y.J * f;
}

}  // namespace adhm
