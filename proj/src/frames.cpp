#include "orbitmm/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace orbitmm {

Permutation identity_permutation(int size) {
  Permutation p(static_cast<std::size_t>(size));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation cycle_permutation(int size, std::initializer_list<int> cycle) {
  Permutation p = identity_permutation(size);
  std::vector<int> pts(cycle);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] < 0 || pts[i] >= size) throw std::invalid_argument("cycle point out of range");
    p[static_cast<std::size_t>(pts[i])] = pts[(i + 1) % pts.size()];
  }
  if (!is_permutation(p)) throw std::invalid_argument("cycle repeats a point");
  return p;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r(g.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[static_cast<std::size_t>(h[i])];
  return r;
}

Permutation inverse(const Permutation& g) {
  Permutation r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

bool is_even(const Permutation& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

Matrix<Rational> simplex_gram(int n) {
  if (n < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  const auto k = static_cast<std::size_t>(n) + 1;
  Matrix<Rational> g(k, k);
  const Rational off = make_rational(-1, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = (i == j) ? Rational(1) : off;
  return g;
}

Frame simplex_frame(int n) {
  if (n < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  Frame f;
  f.n = n;
  f.label = "simplex";
  f.gram = simplex_gram(n);
  const double scale = std::sqrt(static_cast<double>(n + 1) / n);
  // Helmert row h_k = (1,...,1, -k, 0,...,0) / sqrt(k(k+1)), k ones; coordinate k of w_i is scale * h_k[i].
  for (int i = 0; i <= n; ++i) {
    Vector<double> w(static_cast<std::size_t>(n), 0.0);
    for (int k = 1; k <= n; ++k) {
      double h = 0;
      if (i < k)
        h = 1.0;
      else if (i == k)
        h = -static_cast<double>(k);
      w[static_cast<std::size_t>(k - 1)] = scale * h / std::sqrt(static_cast<double>(k) * (k + 1));
    }
    f.vectors.push_back(std::move(w));
  }
  return f;
}

namespace {

Frame triangle_fixture() {
  const double h = std::sqrt(3.0) / 2;
  Frame f;
  f.n = 2;
  f.label = "triangle-2";
  f.gram = simplex_gram(2);
  f.vectors = {{1.0, 0.0}, {-0.5, h}, {-0.5, -h}};
  return f;
}

Frame tetrahedron_fixture() {
  Frame f;
  f.n = 3;
  f.label = "tetrahedron-3";
  f.gram = simplex_gram(3);
  const int corners[4][3] = {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {-1, -1, -1}};
  Matrix<Rational> exact(4, 3);
  const double inv = 1.0 / std::sqrt(3.0);
  for (std::size_t i = 0; i < 4; ++i) {
    Vector<double> w(3);
    for (std::size_t j = 0; j < 3; ++j) {
      w[j] = corners[i][j] * inv;
      exact(i, j) = corners[i][j];
    }
    f.vectors.push_back(std::move(w));
  }
  f.exact_coords = std::move(exact);
  f.exact_norm_sq = 3;
  return f;
}

Frame simplex4_fixture() {
  const double r5 = std::sqrt(5.0);
  const double r2 = std::sqrt(2.0);
  const double a = (r5 - 1) / r2;
  const double b = (r5 + 1) / r2;
  const double p = std::sqrt(5 + r5);
  const double q = std::sqrt(5 - r5);
  Frame f;
  f.n = 4;
  f.label = "simplex-4";
  f.gram = simplex_gram(4);
  f.vectors = {
      {1 / r2, 0, 1 / r2, 0},
      {a / 4, p / 4, -b / 4, q / 4},
      {-b / 4, q / 4, a / 4, -p / 4},
      {-b / 4, -q / 4, a / 4, p / 4},
      {a / 4, -p / 4, -b / 4, -q / 4},
  };
  return f;
}

Frame s5_pair_fixture() {
  const double r3 = std::sqrt(3.0);
  Frame f;
  f.n = 5;
  f.label = "s5-pair-5";
  f.kind = FrameKind::s5_pair;
  // Young orthogonal form of (123) for the (3,2) irrep.
  Matrix<double> sigma{
      {1, 0, 0, 0, 0},
      {0, -0.5, 0, r3 / 2, 0},
      {0, 0, -0.5, 0, r3 / 2},
      {0, -r3 / 2, 0, -0.5, 0},
      {0, 0, -r3 / 2, 0, -0.5},
  };
  const double r5 = std::sqrt(5.0);
  const double r2 = std::sqrt(2.0);
  Vector<double> w1{1 / r5, r2 / r5, 0, 0, r2 / r5};
  Vector<double> w2 = sigma * w1;
  f.vectors = {w1, w2};
  f.sigma = std::move(sigma);
  f.gram = Matrix<Rational>{{Rational(1), make_rational(-1, 5)}, {make_rational(-1, 5), Rational(1)}};
  return f;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"triangle-2", "tetrahedron-3", "simplex-4", "s5-pair-5"};
  return names;
}

Frame fixture_frame(std::string_view name) {
  if (name == "triangle-2") return triangle_fixture();
  if (name == "tetrahedron-3") return tetrahedron_fixture();
  if (name == "simplex-4") return simplex4_fixture();
  if (name == "s5-pair-5") return s5_pair_fixture();
  throw std::invalid_argument("unknown frame fixture: " + std::string(name));
}

void validate(const Frame& frame, double tol) {
  const auto k = frame.size();
  if (frame.gram.rows() != k || frame.gram.cols() != k) throw std::invalid_argument("gram size mismatch");
  for (std::size_t i = 0; i < k; ++i) {
    if (frame.vectors[i].size() != static_cast<std::size_t>(frame.n))
      throw std::invalid_argument("frame vector has wrong dimension");
    for (std::size_t j = 0; j < k; ++j) {
      double ip = dot(frame.vectors[i], frame.vectors[j]);
      if (std::fabs(ip - to_double(frame.gram(i, j))) > tol)
        throw std::invalid_argument("float Gram disagrees with exact Gram at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
    }
  }
  if (frame.kind == FrameKind::simplex) {
    if (!frame.is_simplex()) throw std::invalid_argument("simplex frame needs n+1 vectors");
    if (!(frame.gram == simplex_gram(frame.n))) throw std::invalid_argument("gram is not the simplex gram");
    auto rep = check_tight(frame);
    if (rep.sum_deviation > tol) throw std::invalid_argument("frame vectors do not sum to zero");
  } else {
    if (!frame.sigma) throw std::invalid_argument("s5-pair fixture without sigma");
    const auto& s = *frame.sigma;
    auto cube = s * s * s;
    if (max_abs_diff(cube, Matrix<double>::identity(s.rows())) > tol) throw std::invalid_argument("sigma^3 != 1");
  }
}

TightReport check_tight(const Frame& frame) {
  if (!frame.is_simplex()) throw std::invalid_argument("check_tight requires a simplex frame");
  const auto n = static_cast<std::size_t>(frame.n);
  TightReport rep;
  Vector<double> sum(n, 0.0);
  Matrix<double> outer(n, n);
  for (const auto& w : frame.vectors) {
    for (std::size_t i = 0; i < n; ++i) {
      sum[i] += w[i];
      for (std::size_t j = 0; j < n; ++j) outer(i, j) += w[i] * w[j];
    }
  }
  for (double x : sum) rep.sum_deviation = std::max(rep.sum_deviation, std::fabs(x));
  outer *= static_cast<double>(frame.n) / (frame.n + 1);
  rep.tight_deviation = max_abs_diff(outer, Matrix<double>::identity(n));
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = 0; j < frame.size(); ++j)
      rep.gram_deviation = std::max(
          rep.gram_deviation, std::fabs(dot(frame.vectors[i], frame.vectors[j]) - to_double(frame.gram(i, j))));
  rep.gram_rows_sum_zero = true;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    Rational row(0);
    for (std::size_t j = 0; j < frame.size(); ++j) row += frame.gram(i, j);
    if (!is_zero(row)) rep.gram_rows_sum_zero = false;
  }
  return rep;
}

namespace {
void require_lift_input(const Frame& frame, const Permutation& perm) {
  if (!frame.is_simplex()) throw std::invalid_argument("lift_permutation requires a simplex frame");
  if (perm.size() != frame.size() || !is_permutation(perm))
    throw std::invalid_argument("permutation is not a bijection on the frame indices");
}
}  // namespace

Matrix<double> lift_permutation(const Frame& frame, const Permutation& perm) {
  require_lift_input(frame, perm);
  const auto n = static_cast<std::size_t>(frame.n);
  Matrix<double> rho(n, n);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const auto& to = frame.vectors[static_cast<std::size_t>(perm[i])];
    const auto& from = frame.vectors[i];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) rho(r, c) += to[r] * from[c];
  }
  rho *= static_cast<double>(frame.n) / (frame.n + 1);
  return rho;
}

Matrix<Rational> lift_permutation_exact(const Frame& frame, const Permutation& perm) {
  require_lift_input(frame, perm);
  if (!frame.exact_coords) throw std::invalid_argument("frame " + frame.label + " has no exact coordinates");
  const auto& x = *frame.exact_coords;
  const auto n = static_cast<std::size_t>(frame.n);
  Matrix<Rational> rho(n, n);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const auto gi = static_cast<std::size_t>(perm[i]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) rho(r, c) += x(gi, r) * x(i, c);
  }
  rho *= make_rational(frame.n, frame.n + 1) / frame.exact_norm_sq;
  return rho;
}

}  // namespace orbitmm
