#pragma once

// Necessary conditions on orbit seeds m = |u><v| and the S4-specific constraint values.
// Operations return raw values; comparing them against targets is the caller's job.

#include "orbitmm/matrix.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace orbitmm {

inline constexpr std::array<double, 3> kNecessaryTarget{-1.0, 1.0, 0.0};
inline constexpr std::array<double, 3> kS4Target{-0.25, 0.25, 1.0 / 32.0};

template <std::size_t N>
bool within(const std::array<double, N>& got, const std::array<double, N>& want, double tol = 1e-10) {
  for (std::size_t i = 0; i < N; ++i)
    if (!(std::fabs(got[i] - want[i]) < tol)) return false;
  return true;
}

/// (<v,u>, <v,sigma u>, <v,sigma^2 u>). Throws std::invalid_argument unless sigma is
/// orthogonal with sigma^3 = 1 (1e-10).
std::array<double, 3> necessary_conditions(const Vector<double>& u, const Vector<double>& v,
                                           const Matrix<double>& sigma);

/// Residuals of n = n^3 + |G| <v,u>^3 and n^3 = n + |G| <v,sigma u>^3.
std::array<double, 2> trace_identity_residuals(int n, long group_order, const Vector<double>& u,
                                               const Vector<double>& v, const Matrix<double>& sigma);

/// z = (2/3)(sigma y - y). Requires |y| = 1 within 1e-10.
Vector<double> z_from_y(const Vector<double>& y, const Matrix<double>& sigma);

/// The nine 3x3 matrices 1, beta_x, beta_y, s1..s3, a1..a3 splitting 3x3 matrices
/// into S4 irreps (scalars, diagonal trace-zero, symmetric hollow, antisymmetric).
struct S4Basis {
  Matrix<double> one, beta_x, beta_y;
  std::array<Matrix<double>, 3> s, a;

  std::array<const Matrix<double>*, 9> all() const {
    return {&one, &beta_x, &beta_y, &s[0], &s[1], &s[2], &a[0], &a[1], &a[2]};
  }
};

S4Basis s4_basis();

/// sigma = rho((123)) on the tetrahedron, a cyclic permutation matrix.
Matrix<double> s4_sigma();

/// (sum_cyc <v|s_i|u><v|s_j|u>, sum_cyc <v|a_i|u><v|a_j|u>,
///  <v|bx|u><v|bx^sigma|u><v|bx^sigma^2|u>) with bx^sigma = sigma^T bx sigma.
/// Targets are (-1/4, 1/4, 1/32).
std::array<double, 3> s4_constraints(const Vector<double>& u, const Vector<double>& v);

/// tau^-1 m^T tau. Throws std::domain_error when tau is singular.
template <class T>
Matrix<T> transpose_transform(const Matrix<T>& m, const Matrix<T>& tau) {
  if (!m.square() || !tau.square() || m.rows() != tau.rows())
    throw std::invalid_argument("transpose_transform: dimension mismatch");
  return inverse(tau) * m.transpose() * tau;
}

/// tau^-1 sigma tau = sigma^-1, the condition under which transpose_transform preserves validity.
bool inverts_sigma(const Matrix<double>& tau, const Matrix<double>& sigma, double tol = 1e-10);

}  // namespace orbitmm
