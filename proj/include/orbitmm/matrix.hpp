#pragma once

#include "orbitmm/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitmm {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix over an exact (Rational) or float-64 scalar.
/// Small n x n factor matrices and the large operands of the execution
/// engine share this type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix outer(std::span<const T> x, std::span<const T> y) {
    Matrix m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product: " + a.shape() + " * " + b.shape());
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector<T> operator*(const Matrix& a, std::span<const T> x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }
  friend Vector<T> operator*(const Matrix& a, const Vector<T>& x) {
    return a * std::span<const T>(x);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  template <class U>
  Matrix<U> cast() const {
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_) {
      if constexpr (std::is_same_v<U, double>)
        out.push_back(to_double(x));
      else
        out.push_back(U(x));
    }
    return Matrix<U>(rows_, cols_, std::move(out));
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch: " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
T trace(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("trace of non-square matrix " + m.shape());
  T t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Frobenius pairing <X, Y> = tr(X^T Y).
template <class T>
T frobenius(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("frobenius: shape mismatch " + x.shape() + " vs " + y.shape());
  T s(0);
  auto xd = x.data();
  auto yd = y.data();
  for (std::size_t k = 0; k < xd.size(); ++k) s += xd[k] * yd[k];
  return s;
}

template <class T>
T dot(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  T s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}
template <class T>
T dot(const Vector<T>& x, const Vector<T>& y) {
  return dot(std::span<const T>(x), std::span<const T>(y));
}

inline double max_abs(const Matrix<double>& m) {
  double r = 0;
  for (double x : m.data()) r = std::max(r, std::fabs(x));
  return r;
}

inline double max_abs_diff(const Matrix<double>& a, const Matrix<double>& b) { return max_abs(a - b); }

/// Gauss-Jordan inverse; partial pivoting for floats, first nonzero pivot for exact scalars.
/// Throws std::domain_error when the matrix is singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m, double tol = 1e-12) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    if constexpr (std::is_same_v<T, double>) {
      double best = tol;
      for (std::size_t r = col; r < n; ++r)
        if (std::fabs(a(r, col)) > best) best = std::fabs(a(r, col)), piv = r;
    } else {
      for (std::size_t r = col; r < n && piv == n; ++r)
        if (!is_zero(a(r, col))) piv = r;
    }
    if (piv == n) throw std::domain_error("singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    T p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Row-echelon rank. Exact for Rational; float pivots below tol count as zero.
template <class T>
std::size_t matrix_rank(Matrix<T> a, double tol = 1e-9) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t piv = a.rows();
    if constexpr (std::is_same_v<T, double>) {
      double best = tol;
      for (std::size_t r = rank; r < a.rows(); ++r)
        if (std::fabs(a(r, col)) > best) best = std::fabs(a(r, col)), piv = r;
    } else {
      for (std::size_t r = rank; r < a.rows() && piv == a.rows(); ++r)
        if (!is_zero(a(r, col))) piv = r;
    }
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(rank, j), a(piv, j));
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, col))) continue;
      T f = a(r, col) / a(rank, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace orbitmm
