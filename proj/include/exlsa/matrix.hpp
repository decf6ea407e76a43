#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "exlsa/scalar.hpp"

namespace exlsa {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector &v);
Vector &axpy(Vector &y, const Scalar &a, const Vector &x); // y += a x
Vector operator+(Vector a, const Vector &b);
Vector operator-(Vector a, const Vector &b);
Vector operator*(const Scalar &c, Vector v);
Vector operator-(Vector v);

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector &d);
  static Matrix from_columns(const std::vector<Vector> &cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_diagonal() const;

  Matrix &operator+=(const Matrix &o);
  Matrix &operator-=(const Matrix &o);
  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend Matrix operator*(const Scalar &c, Matrix m);
  friend Vector operator*(const Matrix &a, const Vector &v);
  friend bool operator==(const Matrix &a, const Matrix &b) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// x^T G y.
Scalar bilinear(const Matrix &g, const Vector &x, const Vector &y);
/// Tr(ab) without forming the product.
Scalar trace_product(const Matrix &a, const Matrix &b);
/// ab - ba.
Matrix commutator(const Matrix &a, const Matrix &b);

/// Solves A X = B for square nonsingular A by fraction-free elimination.
/// Throws SingularMatrix.
Matrix solve_linear(const Matrix &a, const Matrix &b);
Vector solve_linear(const Matrix &a, const Vector &b);
Matrix inverse(const Matrix &a);
Scalar determinant(const Matrix &a);
std::size_t rank(const Matrix &a);
/// Basis of {x : A x = 0} read off the reduced row echelon form, one vector
/// per free column with a 1 in that column.
std::vector<Vector> nullspace(const Matrix &a);

/// Sparse row: (column, coefficient) pairs.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Solves a square sparse system exactly; pivots on the sparsest remaining
/// row so block-structured systems never fill in across blocks.
Vector solve_sparse(const std::vector<SparseRow> &rows, const Vector &rhs, std::size_t n);

} // namespace exlsa
