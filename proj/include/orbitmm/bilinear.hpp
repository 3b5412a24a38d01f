#pragma once

// Running a decomposition as a matrix multiplication algorithm:
//   AB = sum_r <a_r, A> <b_r, B> c_r^T,   <X, Y> = tr(X^T Y),
// applied to blocks for the recursive version.

#include "orbitmm/tensor.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace orbitmm {

/// Textbook triple loop.
template <class T>
Matrix<T> naive_multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("naive_multiply: " + a.shape() + " * " + b.shape());
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

/// One level of the combination rule on n x n operands. Does not check validity.
template <class T>
Matrix<T> multiply_via(const Decomposition<T>& dec, const Matrix<T>& a, const Matrix<T>& b) {
  const auto n = static_cast<std::size_t>(dec.n());
  if (a.rows() != n || !a.square() || b.rows() != n || !b.square())
    throw std::invalid_argument("multiply_via: operands must be " + std::to_string(n) + "x" + std::to_string(n));
  Matrix<T> c(n, n);
  for (const auto& t : dec.terms()) {
    const T w = frobenius(t.a, a) * frobenius(t.b, b);
    if (is_zero(w)) continue;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) c(p, q) += w * t.c(q, p);
  }
  return c;
}

/// A float decomposition checked once at construction. Invalid decompositions are
/// kept (callers may force execution) but flagged.
class BilinearAlgorithm {
 public:
  explicit BilinearAlgorithm(Decomposition<double> dec, double tol = 1e-9);

  const Decomposition<double>& decomposition() const { return dec_; }
  int n() const { return dec_.n(); }
  std::size_t rank() const { return dec_.rank(); }
  bool valid() const { return valid_; }
  double residual() const { return residual_; }

 private:
  Decomposition<double> dec_;
  bool valid_ = false;
  double residual_ = 0;
};

struct MulReport {
  Matrix<double> result;
  std::uint64_t scalar_multiplications = 0;
  std::chrono::duration<double> wall_time{};
  int recursion_depth = 0;
};

/// Smallest power of n that is >= size (1 for size <= 1).
std::size_t next_power(std::size_t size, int n);

/// Pads A, B with zeros to the next power of n and recurses by n x n blocking,
/// switching to naive_multiply once the block size is <= cutoff. Counts the scalar
/// multiplications of the naive leaves. Throws std::invalid_argument for cutoff < 1
/// or non-square/mismatched operands.
MulReport multiply_recursive(const BilinearAlgorithm& algo, const Matrix<double>& a, const Matrix<double>& b,
                             std::size_t cutoff = 1);

/// Multiplication count of multiply_recursive without running it.
std::uint64_t count_multiplications(std::size_t rank, int n, std::size_t size, std::size_t cutoff = 1);

struct BenchRow {
  std::size_t size = 0;
  std::size_t padded = 0;
  double recursive_seconds = 0;
  double naive_seconds = 0;
  std::uint64_t recursive_mults = 0;
  std::uint64_t naive_mults = 0;
  double exponent = 0;  ///< log(recursive_mults) / log(padded)
  double max_rel_error = 0;
};

/// Random operands in [-1, 1) from a fixed seed.
std::vector<BenchRow> benchmark(const BilinearAlgorithm& algo, const std::vector<std::size_t>& sizes,
                                std::size_t cutoff = 1, unsigned seed = 1);

/// max |x - y| / max(1, max |y|)
double relative_error(const Matrix<double>& x, const Matrix<double>& y);

}  // namespace orbitmm
