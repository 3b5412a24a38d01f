#include "orbitmm/bilinear.hpp"

#include "orbitmm/verify.hpp"

#include <cmath>
#include <random>

namespace orbitmm {

namespace {

using Clock = std::chrono::steady_clock;

struct Recursor {
  const Decomposition<double>& dec;
  std::size_t n;
  std::size_t cutoff;
  std::uint64_t mults = 0;

  // a, b are size x size, row-major.
  std::vector<double> run(const std::vector<double>& a, const std::vector<double>& b, std::size_t size) {
    std::vector<double> c(size * size, 0.0);
    if (size <= cutoff) {
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t k = 0; k < size; ++k) {
          const double aik = a[i * size + k];
          for (std::size_t j = 0; j < size; ++j) c[i * size + j] += aik * b[k * size + j];
        }
      mults += static_cast<std::uint64_t>(size) * size * size;
      return c;
    }
    const std::size_t s = size / n;
    std::vector<double> sa(s * s), sb(s * s);
    for (const auto& t : dec.terms()) {
      combine(sa, a, t.a, size, s);
      combine(sb, b, t.b, size, s);
      const std::vector<double> p = run(sa, sb, s);
      for (std::size_t bp = 0; bp < n; ++bp)
        for (std::size_t bq = 0; bq < n; ++bq) {
          const double w = t.c(bq, bp);
          if (w == 0.0) continue;
          for (std::size_t i = 0; i < s; ++i) {
            double* row = &c[(bp * s + i) * size + bq * s];
            const double* src = &p[i * s];
            for (std::size_t j = 0; j < s; ++j) row[j] += w * src[j];
          }
        }
    }
    return c;
  }

  // out = sum_{ij} f(i,j) X_ij over the s x s blocks of x.
  void combine(std::vector<double>& out, const std::vector<double>& x, const Matrix<double>& f, std::size_t size,
               std::size_t s) const {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t bi = 0; bi < n; ++bi)
      for (std::size_t bj = 0; bj < n; ++bj) {
        const double w = f(bi, bj);
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < s; ++i) {
          const double* src = &x[(bi * s + i) * size + bj * s];
          double* dst = &out[i * s];
          for (std::size_t j = 0; j < s; ++j) dst[j] += w * src[j];
        }
      }
  }
};

std::vector<double> padded(const Matrix<double>& m, std::size_t size) {
  std::vector<double> out(size * size, 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i * size + j] = m(i, j);
  return out;
}

Matrix<double> random_matrix(std::size_t size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix<double> m(size, size);
  for (auto& x : m.data()) x = dist(rng);
  return m;
}

}  // namespace

BilinearAlgorithm::BilinearAlgorithm(Decomposition<double> dec, double tol) : dec_(std::move(dec)) {
  const FloatReport rep = verify_float(dec_, tol);
  valid_ = rep.valid;
  residual_ = rep.residual;
}

std::size_t next_power(std::size_t size, int n) {
  if (n < 2) throw std::invalid_argument("next_power needs n >= 2");
  std::size_t p = 1;
  while (p < size) p *= static_cast<std::size_t>(n);
  return p;
}

std::uint64_t count_multiplications(std::size_t rank, int n, std::size_t size, std::size_t cutoff) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  std::size_t s = n < 2 ? size : next_power(size, n);
  std::uint64_t branches = 1;
  while (s > cutoff) {
    branches *= rank;
    s /= static_cast<std::size_t>(n);
  }
  return branches * s * s * s;
}

MulReport multiply_recursive(const BilinearAlgorithm& algo, const Matrix<double>& a, const Matrix<double>& b,
                             std::size_t cutoff) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw std::invalid_argument("multiply_recursive: " + a.shape() + " * " + b.shape());
  const auto start = Clock::now();
  const std::size_t size = a.rows();
  const int n = algo.n();
  MulReport rep;
  if (n < 2) {
    rep.result = naive_multiply(a, b);
    rep.scalar_multiplications = static_cast<std::uint64_t>(size) * size * size;
    rep.wall_time = Clock::now() - start;
    return rep;
  }
  const std::size_t full = next_power(size, n);
  for (std::size_t s = full; s > cutoff; s /= static_cast<std::size_t>(n)) ++rep.recursion_depth;

  Recursor rec{algo.decomposition(), static_cast<std::size_t>(n), cutoff};
  const std::vector<double> c = rec.run(padded(a, full), padded(b, full), full);
  rep.result = Matrix<double>(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) rep.result(i, j) = c[i * full + j];
  rep.scalar_multiplications = rec.mults;
  rep.wall_time = Clock::now() - start;
  return rep;
}

double relative_error(const Matrix<double>& x, const Matrix<double>& y) {
  return max_abs_diff(x, y) / std::max(1.0, max_abs(y));
}

std::vector<BenchRow> benchmark(const BilinearAlgorithm& algo, const std::vector<std::size_t>& sizes,
                                std::size_t cutoff, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<BenchRow> rows;
  for (std::size_t size : sizes) {
    const Matrix<double> a = random_matrix(size, rng);
    const Matrix<double> b = random_matrix(size, rng);
    BenchRow row;
    row.size = size;
    row.padded = algo.n() < 2 ? size : next_power(size, algo.n());

    const MulReport rep = multiply_recursive(algo, a, b, cutoff);
    row.recursive_seconds = rep.wall_time.count();
    row.recursive_mults = rep.scalar_multiplications;

    const auto start = Clock::now();
    const Matrix<double> ref = naive_multiply(a, b);
    row.naive_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    row.naive_mults = static_cast<std::uint64_t>(size) * size * size;

    row.exponent = row.padded > 1 ? std::log(static_cast<double>(row.recursive_mults)) /
                                        std::log(static_cast<double>(row.padded))
                                  : 0.0;
    row.max_rel_error = relative_error(rep.result, ref);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace orbitmm
