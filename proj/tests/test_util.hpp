#pragma once

#include "orbitmm/matrix.hpp"

#include <random>

namespace testutil {

using orbitmm::Matrix;
using orbitmm::Rational;

inline Rational random_rational(std::mt19937_64& rng, long range = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return orbitmm::make_rational(num(rng), den(rng));
}

inline Matrix<Rational> random_rational_matrix(std::size_t n, std::mt19937_64& rng) {
  Matrix<Rational> m(n, n);
  for (auto& x : m.data()) x = random_rational(rng);
  return m;
}

inline Matrix<double> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Matrix<double> m(rows, cols);
  for (auto& x : m.data()) x = d(rng);
  return m;
}

}  // namespace testutil
