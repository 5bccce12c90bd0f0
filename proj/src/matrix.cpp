#include "adhm/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace adhm {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const Rational& entry : data_) {
    if (entry != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix result(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) result.at(j, i) = at(i, j);
  }
  return result;
}

Matrix Matrix::operator-() const {
  Matrix result = *this;
  for (Rational& entry : result.data_) entry = -entry;
  return result;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix add: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix subtract: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require(lhs.cols_ == rhs.rows_, "matrix multiply: shape mismatch");
  Matrix result(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& factor = lhs.at(i, k);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) != 0) result.at(i, j) += factor * rhs.at(k, j);
      }
    }
  }
  return result;
}

Matrix operator*(const Rational& scalar, const Matrix& m) {
  Matrix result = m;
  for (Rational& entry : result.data_) entry *= scalar;
  return result;
}

Rational trace(const Matrix& m) {
  require(m.is_square(), "trace: square matrix required");
  Rational sum(0);
  for (std::size_t k = 0; k < m.rows(); ++k) sum += m.at(k, k);
  return sum;
}

Matrix pow(const Matrix& m, std::size_t exponent) {
  require(m.is_square(), "pow: square matrix required");
  Matrix result = Matrix::identity(m.rows());
  for (std::size_t k = 0; k < exponent; ++k) result = result * m;
  return result;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require(left.rows() == right.rows(), "hstack: row count mismatch");
  Matrix result(left.rows(), left.cols() + right.cols());
  set_block(result, 0, 0, left);
  set_block(result, 0, left.cols(), right);
  return result;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require(top.cols() == bottom.cols(), "vstack: column count mismatch");
  Matrix result(top.rows() + bottom.rows(), top.cols());
  set_block(result, 0, 0, top);
  set_block(result, top.rows(), 0, bottom);
  return result;
}

Matrix block(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t rows,
             std::size_t cols) {
  require(row0 + rows <= m.rows() && col0 + cols <= m.cols(), "block: out of range");
  Matrix result(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) result.at(i, j) = m.at(row0 + i, col0 + j);
  }
  return result;
}

void set_block(Matrix& m, std::size_t row0, std::size_t col0, const Matrix& sub) {
  require(row0 + sub.rows() <= m.rows() && col0 + sub.cols() <= m.cols(),
          "set_block: out of range");
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    for (std::size_t j = 0; j < sub.cols(); ++j) m.at(row0 + i, col0 + j) = sub.at(i, j);
  }
}

Matrix column(const Matrix& m, std::size_t col) { return block(m, 0, col, m.rows(), 1); }

Matrix vec(const Matrix& m) {
  Matrix result(m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) result.at(i * m.cols() + j, 0) = m.at(i, j);
  }
  return result;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  require(v.cols() == 1 && v.rows() == rows * cols, "unvec: shape mismatch");
  Matrix result(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) result.at(i, j) = v.at(i * cols + j, 0);
  }
  return result;
}

Echelon rref(const Matrix& m) {
  Echelon out;
  out.reduced = m;
  Matrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t best = pivot_row;
    for (std::size_t row = pivot_row + 1; row < a.rows(); ++row) {
      if (compare_abs(a.at(row, col), a.at(best, col)) > 0) best = row;
    }
    if (a.at(best, col) == 0) continue;
    if (best != pivot_row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(best, j), a.at(pivot_row, j));
    }
    const Rational pivot = a.at(pivot_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(pivot_row, j) /= pivot;
    for (std::size_t row = 0; row < a.rows(); ++row) {
      if (row == pivot_row || a.at(row, col) == 0) continue;
      const Rational factor = a.at(row, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        a.at(row, j) -= factor * a.at(pivot_row, j);
      }
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.rank = out.pivot_cols.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t col : e.pivot_cols) is_pivot[col] = true;

  Matrix basis(m.cols(), m.cols() - e.rank);
  std::size_t out_col = 0;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(free_col, out_col) = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      basis.at(e.pivot_cols[k], out_col) = -e.reduced.at(k, free_col);
    }
    ++out_col;
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  require(m.rows() == rhs.rows(), "solve: row count mismatch");
  const Echelon e = rref(hstack(m, rhs));
  // Any pivot landing in the rhs block marks an inconsistent system.
  for (std::size_t col : e.pivot_cols) {
    if (col >= m.cols()) return std::nullopt;
  }
  Matrix x(m.cols(), rhs.cols());
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      x.at(e.pivot_cols[k], j) = e.reduced.at(k, m.cols() + j);
    }
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require(m.is_square(), "inverse: square matrix required");
  const Echelon e = rref(hstack(m, Matrix::identity(m.rows())));
  if (e.rank != m.rows()) return std::nullopt;
  for (std::size_t col : e.pivot_cols) {
    if (col >= m.cols()) return std::nullopt;
  }
  return block(e.reduced, 0, m.cols(), m.rows(), m.rows());
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix random_matrix(std::size_t rows, std::size_t cols, long bound, Rng& rng) {
  require(bound >= 0, "random_matrix: bound must be nonnegative");
  Matrix result(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      result.at(i, j) = Rational(static_cast<long>(rng.uniform_int(-bound, bound)));
    }
  }
  return result;
}

Matrix random_invertible(std::size_t n, long bound, Rng& rng) {
  require(bound >= 1, "random_invertible: bound must be positive");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix candidate = random_matrix(n, n, bound, rng);
    if (is_invertible(candidate)) return candidate;
  }
  throw std::runtime_error("random_invertible: retry cap exceeded");
}

bool Subspace::contains(const Matrix& v) const {
  if (v.rows() != ambient || v.cols() != 1) {
    throw std::invalid_argument("Subspace::contains: vector shape mismatch");
  }
  if (v.is_zero()) return true;
  return rank(hstack(basis, v)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient) {
    throw std::invalid_argument("Subspace::contains: ambient mismatch");
  }
  return rank(hstack(basis, other.basis)) == dim();
}

bool Subspace::same_as(const Subspace& other) const {
  return dim() == other.dim() && contains(other);
}

Matrix Subspace::annihilator() const {
  return kernel_basis(basis.transpose()).transpose();
}

Subspace Subspace::zero(std::size_t ambient) { return {ambient, Matrix(ambient, 0)}; }

Subspace Subspace::full(std::size_t ambient) { return {ambient, Matrix::identity(ambient)}; }

Subspace Subspace::column_space(const Matrix& m) {
  const Echelon e = rref(m);
  Matrix basis(m.rows(), e.rank);
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    for (std::size_t i = 0; i < m.rows(); ++i) basis.at(i, k) = m.at(i, e.pivot_cols[k]);
  }
  return {m.rows(), basis};
}

Subspace Subspace::kernel(const Matrix& m) { return {m.cols(), kernel_basis(m)}; }

}  // namespace adhm
