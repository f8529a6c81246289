#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shg/rational.hpp"

namespace shg {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix. Sizes stay small (a few dozen), so no
/// blocking or sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, const Rational& scalar);
Matrix operator*(const Rational& scalar, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const Rational> x);

Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(std::span<const Rational> a, const Rational& s);
/// a += s * b
void axpy(Vector& a, const Rational& s, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational sum(std::span<const Rational> a);
Rational norm_l1(std::span<const Rational> a);
Rational norm_linf(std::span<const Rational> a);
Vector zeros(std::size_t n);
Vector unit(std::size_t n, std::size_t i);

/// Reduced row echelon form, computed in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m);

/// Linearly independent subset of the given vectors spanning the same space
/// (greedy, input order preserved).
std::vector<Vector> independent_subset(const std::vector<Vector>& vectors);

struct LinearSolution {
  bool consistent = false;
  Vector particular;             ///< free variables set to zero
  std::vector<Vector> nullspace; ///< directions of the solution set
};

/// Exact solution set of a x = b.
LinearSolution solve_linear(const Matrix& a, std::span<const Rational> b);

}  // namespace shg
