#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "adhm/rational.hpp"
#include "adhm/rng.hpp"

namespace adhm {

// Dense row-major matrix over Q. Zero-row and zero-column shapes are legal
// everywhere and behave like the corresponding empty linear maps.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }
  const Rational& at(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Rational& scalar, const Matrix& m);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational trace(const Matrix& m);
Matrix pow(const Matrix& m, std::size_t exponent);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix block(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t rows,
             std::size_t cols);
void set_block(Matrix& m, std::size_t row0, std::size_t col0, const Matrix& sub);
Matrix column(const Matrix& m, std::size_t col);

// Flattening between a matrix and a column vector, always row-major
// (entry (i,j) lands at position i*cols + j). Every vectorized linear map in
// the project uses this one convention.
Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

// Reduced row echelon form by exact Gauss-Jordan elimination; pivots are
// chosen by largest magnitude in the current column (cheap hedge against
// coefficient blowup, and it pins a deterministic elimination order).
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns span the nullspace {v : Mv = 0}; one basis vector per free column,
// in column order (the standard rref back-substitution basis).
Matrix kernel_basis(const Matrix& m);

// Solves M x = rhs for each rhs column; empty result if any column is
// inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

// Entries drawn uniformly from the integers in [-bound, bound].
Matrix random_matrix(std::size_t rows, std::size_t cols, long bound, Rng& rng);
// Rejection-sampled random_matrix; with entries in [-bound, bound] a singular
// draw is rare, so the retry loop terminates fast in practice (hard cap 1000).
Matrix random_invertible(std::size_t n, long bound, Rng& rng);

// A linear subspace of Q^ambient, carried as an ambient x dim matrix with
// independent columns.
struct Subspace {
  std::size_t ambient = 0;
  Matrix basis;

  std::size_t dim() const { return basis.cols(); }
  bool contains(const Matrix& v) const;
  bool contains(const Subspace& other) const;
  bool same_as(const Subspace& other) const;

  // Rows N with span(basis) = ker N; used to intersect and preimage
  // subspaces without leaving matrix land.
  Matrix annihilator() const;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace column_space(const Matrix& m);
  static Subspace kernel(const Matrix& m);
};

}  // namespace adhm
