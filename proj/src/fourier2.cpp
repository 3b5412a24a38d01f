#include "orbitmm/fourier2.hpp"

#include <cmath>

namespace orbitmm {

const char* fourier2_name(int element) {
  static const char* names[4] = {"1", "pi", "rho_x", "rho_y"};
  if (element < 0 || element > 3) throw std::out_of_range("fourier2 element");
  return names[element];
}

std::array<double, 5> strassen_equations(const Matrix<double>& m) {
  if (m.rows() != 2 || !m.square()) throw std::invalid_argument("strassen_equations needs a 2x2 matrix");
  const auto basis = fourier_basis2<double>();
  const double t1 = trace(m);
  const double tp = trace(basis[kPi] * m);
  const double tx = trace(basis[kRhoX] * m);
  const double ty = trace(basis[kRhoY] * m);
  const double rr = tx * tx + ty * ty;
  return {
      t1 * t1 * t1 + 1.0,
      t1 * tp * tp + 1.0 / 3.0,
      t1 * -0.5 * rr - 2.0 / 3.0,
      tp * -(std::sqrt(3.0) / 2.0) * rr + 2.0 / 3.0,
      tx * tx * tx - 3.0 * tx * ty * ty,
  };
}

}  // namespace orbitmm
