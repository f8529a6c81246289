#include "shg/linalg.hpp"

#include <utility>

#include "shg/errors.hpp"

namespace shg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(what) + ": matrix shapes differ");
}

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": vector lengths differ");
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("Matrix: data size != rows*cols");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_length(rows[i].size(), m.cols(), "Matrix::from_rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, const Rational& scalar) { return a *= scalar; }
Matrix operator*(const Rational& scalar, Matrix a) { return a *= scalar; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, std::span<const Rational> x) {
  require_same_length(a.cols(), x.size(), "matrix-vector product");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a.size(), b.size(), "add");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a.size(), b.size(), "subtract");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(std::span<const Rational> a, const Rational& s) {
  Vector r(a.begin(), a.end());
  for (auto& v : r) v *= s;
  return r;
}

void axpy(Vector& a, const Rational& s, std::span<const Rational> b) {
  require_same_length(a.size(), b.size(), "axpy");
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_length(a.size(), b.size(), "dot");
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Rational sum(std::span<const Rational> a) {
  Rational r = 0;
  for (const auto& v : a) r += v;
  return r;
}

Rational norm_l1(std::span<const Rational> a) {
  Rational r = 0;
  for (const auto& v : a) r += abs(v);
  return r;
}

Rational norm_linf(std::span<const Rational> a) {
  Rational r = 0;
  for (const auto& v : a)
    if (abs(v) > r) r = abs(v);
  return r;
}

Vector zeros(std::size_t n) { return Vector(n); }

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> independent_subset(const std::vector<Vector>& vectors) {
  std::vector<Vector> chosen;
  for (const auto& v : vectors) {
    auto trial = chosen;
    trial.push_back(v);
    if (rank(Matrix::from_rows(trial)) == trial.size()) chosen = std::move(trial);
  }
  return chosen;
}

LinearSolution solve_linear(const Matrix& a, std::span<const Rational> b) {
  require_same_length(a.rows(), b.size(), "solve_linear");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);

  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == a.cols()) return sol;  // 0 = 1 row
  sol.consistent = true;
  sol.particular.assign(a.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = aug(k, a.cols());
  sol.nullspace = nullspace(a);
  return sol;
}

}  // namespace shg
