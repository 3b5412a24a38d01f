#pragma once

// Fourier analysis of 2x2 matrix triples in the basis {1, pi, rho_x, rho_y}^3.

#include "orbitmm/tensor.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace orbitmm {

/// Enumeration order of the basis, also the key order of coefficient tables.
enum Fourier2Element : int { kOne = 0, kPi = 1, kRhoX = 2, kRhoY = 3 };

const char* fourier2_name(int element);

/// 1, pi = [[0,-1],[1,0]], rho_x = [[1,0],[0,-1]], rho_y = [[0,-1],[-1,0]].
/// Pairwise Frobenius-orthogonal with <alpha, alpha> = 2.
template <class T>
std::array<Matrix<T>, 4> fourier_basis2() {
  const T z(0), o(1), m(-1);
  return {Matrix<T>{{o, z}, {z, o}}, Matrix<T>{{z, m}, {o, z}}, Matrix<T>{{o, z}, {z, m}},
          Matrix<T>{{z, m}, {m, z}}};
}

/// Dense 64-entry table keyed by (alpha, beta, gamma) in Fourier2Element order.
template <class T>
struct FourierCoefficients2 {
  std::array<T, 64> c{};

  FourierCoefficients2() { c.fill(T(0)); }
  static constexpr int key(int a, int b, int g) { return 16 * a + 4 * b + g; }
  T& operator()(int a, int b, int g) { return c[static_cast<std::size_t>(key(a, b, g))]; }
  const T& operator()(int a, int b, int g) const { return c[static_cast<std::size_t>(key(a, b, g))]; }
};

/// c(alpha, beta, gamma) = <T, alpha (x) beta (x) gamma> / 8.
template <class T>
FourierCoefficients2<T> fourier_coefficients(const Tensor3<T>& t) {
  if (t.n() != 2) throw std::invalid_argument("fourier_coefficients needs n = 2, got n=" + std::to_string(t.n()));
  const auto basis = fourier_basis2<T>();
  FourierCoefficients2<T> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int g = 0; g < 4; ++g) {
        Rank1Term<T> term{basis[a], basis[b], basis[g]};
        out(a, b, g) = frobenius_inner(t, tensor_of(term)) / T(8);
      }
  return out;
}

/// sum c(alpha, beta, gamma) alpha (x) beta (x) gamma
template <class T>
Tensor3<T> reconstruct(const FourierCoefficients2<T>& coeffs) {
  const auto basis = fourier_basis2<T>();
  Tensor3<T> out(2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int g = 0; g < 4; ++g) {
        const T& c = coeffs(a, b, g);
        if (is_zero(c)) continue;
        accumulate_term(out, Rank1Term<T>{basis[a] * c, basis[b], basis[g]});
      }
  return out;
}

/// Residuals (left minus right) of the five simplified Strassen constraint
/// equations for a 2x2 seed m:
///   (tr m)^3 = -1
///   (tr m)(tr pi m)^2 = -1/3
///   (tr m) * -1/2 ((tr rx m)^2 + (tr ry m)^2) = 2/3
///   (tr pi m) * -sqrt(3)/2 ((tr rx m)^2 + (tr ry m)^2) = -2/3
///   (tr rx m)^3 - 3 (tr rx m)(tr ry m)^2 = 0
std::array<double, 5> strassen_equations(const Matrix<double>& m);

/// Residuals of (tr m)^2 + (tr pi m)^2 = |m|^2 + 2 det m and
/// (tr rx m)^2 + (tr ry m)^2 = |m|^2 - 2 det m. Exact for Rational.
template <class T>
std::array<T, 2> det_identities(const Matrix<T>& m) {
  if (m.rows() != 2 || !m.square()) throw std::invalid_argument("det_identities needs a 2x2 matrix");
  const auto basis = fourier_basis2<T>();
  const T t1 = trace(m);
  const T tp = trace(basis[kPi] * m);
  const T tx = trace(basis[kRhoX] * m);
  const T ty = trace(basis[kRhoY] * m);
  const T norm2 = frobenius(m, m);
  const T det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return {T(t1 * t1 + tp * tp - (norm2 + T(2) * det)), T(tx * tx + ty * ty - (norm2 - T(2) * det))};
}

}  // namespace orbitmm
