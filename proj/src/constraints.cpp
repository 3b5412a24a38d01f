#include "orbitmm/constraints.hpp"

namespace orbitmm {

namespace {

void require_order3_orthogonal(const Matrix<double>& sigma) {
  if (!sigma.square()) throw std::invalid_argument("sigma must be square");
  const auto id = Matrix<double>::identity(sigma.rows());
  if (max_abs_diff(sigma.transpose() * sigma, id) > 1e-10) throw std::invalid_argument("sigma is not orthogonal");
  if (max_abs_diff(sigma * sigma * sigma, id) > 1e-10) throw std::invalid_argument("sigma does not have order 3");
}

double bilinear(const Vector<double>& v, const Matrix<double>& m, const Vector<double>& u) {
  return dot(v, m * u);
}

}  // namespace

std::array<double, 3> necessary_conditions(const Vector<double>& u, const Vector<double>& v,
                                           const Matrix<double>& sigma) {
  require_order3_orthogonal(sigma);
  if (u.size() != sigma.rows() || v.size() != u.size()) throw std::invalid_argument("u, v, sigma dimension mismatch");
  const Vector<double> su = sigma * u;
  const Vector<double> ssu = sigma * su;
  return {dot(v, u), dot(v, su), dot(v, ssu)};
}

std::array<double, 2> trace_identity_residuals(int n, long group_order, const Vector<double>& u,
                                               const Vector<double>& v, const Matrix<double>& sigma) {
  const auto c = necessary_conditions(u, v, sigma);
  const double n1 = n;
  const double n3 = n1 * n1 * n1;
  const double g = static_cast<double>(group_order);
  return {n3 + g * c[0] * c[0] * c[0] - n1, n1 + g * c[1] * c[1] * c[1] - n3};
}

Vector<double> z_from_y(const Vector<double>& y, const Matrix<double>& sigma) {
  if (std::fabs(std::sqrt(dot(y, y)) - 1.0) > 1e-10) throw std::invalid_argument("z_from_y needs a unit vector y");
  const Vector<double> sy = sigma * y;
  Vector<double> z(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) z[i] = 2.0 / 3.0 * (sy[i] - y[i]);
  return z;
}

S4Basis s4_basis() {
  const double h = std::sqrt(3.0) / 2;
  S4Basis b;
  b.one = Matrix<double>::identity(3);
  b.beta_x = Matrix<double>{{1, 0, 0}, {0, -0.5, 0}, {0, 0, -0.5}};
  b.beta_y = Matrix<double>{{0, 0, 0}, {0, h, 0}, {0, 0, -h}};
  b.s = {Matrix<double>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}, Matrix<double>{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}},
         Matrix<double>{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}};
  b.a = {Matrix<double>{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}, Matrix<double>{{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
         Matrix<double>{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  return b;
}

Matrix<double> s4_sigma() { return Matrix<double>{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}; }

std::array<double, 3> s4_constraints(const Vector<double>& u, const Vector<double>& v) {
  if (u.size() != 3 || v.size() != 3) throw std::invalid_argument("s4_constraints needs n = 3");
  const S4Basis b = s4_basis();
  const Matrix<double> sigma = s4_sigma();
  std::array<double, 3> fs{}, fa{};
  for (std::size_t i = 0; i < 3; ++i) {
    fs[i] = bilinear(v, b.s[i], u);
    fa[i] = bilinear(v, b.a[i], u);
  }
  double std_sum = 0, anti_sum = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std_sum += fs[i] * fs[(i + 1) % 3];
    anti_sum += fa[i] * fa[(i + 1) % 3];
  }
  const Matrix<double> bx1 = sigma.transpose() * b.beta_x * sigma;
  const Matrix<double> bx2 = sigma.transpose() * bx1 * sigma;
  const double box = bilinear(v, b.beta_x, u) * bilinear(v, bx1, u) * bilinear(v, bx2, u);
  return {std_sum, anti_sum, box};
}

bool inverts_sigma(const Matrix<double>& tau, const Matrix<double>& sigma, double tol) {
  return max_abs_diff(inverse(tau) * sigma * tau, inverse(sigma)) < tol;
}

}  // namespace orbitmm
