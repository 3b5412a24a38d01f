#pragma once

#include "orbitmm/matrix.hpp"
#include "orbitmm/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbitmm {

/// perm[i] is the image of index i (0-based).
using Permutation = std::vector<int>;

Permutation identity_permutation(int size);
/// Cycle notation with 0-based points, e.g. cycle_permutation(4, {0, 1, 2}) is (123) on four points.
Permutation cycle_permutation(int size, std::initializer_list<int> cycle);
/// (g o h)(i) = g(h(i)).
Permutation compose(const Permutation& g, const Permutation& h);
Permutation inverse(const Permutation& g);
bool is_permutation(const Permutation& p);
bool is_even(const Permutation& p);

enum class FrameKind {
  simplex,  ///< n+1 unit vectors at the corners of a regular simplex
  s5_pair,  ///< the two S5 orbit vectors w1, w2 = sigma w1 plus sigma; not a simplex
};

/// Unit vectors in R^n. Coordinates are float; every exactness claim goes through
/// the rational Gram matrix.
struct Frame {
  int n = 0;
  std::vector<Vector<double>> vectors;
  Matrix<Rational> gram;
  std::string label = "generic";
  FrameKind kind = FrameKind::simplex;
  /// Order-3 orthogonal matrix shipped with the s5-pair fixture.
  std::optional<Matrix<double>> sigma;
  /// Rows are the frame vectors scaled by sqrt(exact_norm_sq), when they are rational.
  std::optional<Matrix<Rational>> exact_coords;
  Rational exact_norm_sq = 1;

  std::size_t size() const { return vectors.size(); }
  bool is_simplex() const { return kind == FrameKind::simplex && size() == static_cast<std::size_t>(n) + 1; }
};

/// Exact simplex Gram: 1 on the diagonal, -1/n elsewhere.
Matrix<Rational> simplex_gram(int n);

/// Projects the n+1 standard basis vectors of R^{n+1} onto the hyperplane orthogonal
/// to the all-ones vector, normalizes them, and writes them in the Helmert basis of
/// that hyperplane.
Frame simplex_frame(int n);

/// triangle-2, tetrahedron-3, simplex-4, s5-pair-5. Throws std::invalid_argument otherwise.
Frame fixture_frame(std::string_view name);
const std::vector<std::string>& fixture_names();

/// Checks frame invariants (unit norms, exact Gram agreement, vectors summing to zero
/// for simplex frames). Throws std::invalid_argument describing the first violation.
void validate(const Frame& frame, double tol = 1e-12);

struct TightReport {
  double sum_deviation = 0;    ///< max |sum_i w_i| over coordinates
  double tight_deviation = 0;  ///< max |(n/(n+1)) sum_i w_i w_i^T - 1|
  double gram_deviation = 0;   ///< max |w_i . w_j - gram[i][j]|
  bool gram_rows_sum_zero = false;

  bool tight(double tol = 1e-12) const {
    return sum_deviation < tol && tight_deviation < tol && gram_deviation < tol && gram_rows_sum_zero;
  }
};

/// Simplex frames only.
TightReport check_tight(const Frame& frame);

/// rho(g) = (n/(n+1)) sum_i |w_{g(i)}><w_i|, the orthogonal matrix sending w_i to w_{g(i)}.
Matrix<double> lift_permutation(const Frame& frame, const Permutation& perm);

/// Same closed form evaluated on the exact coordinates; requires frame.exact_coords.
Matrix<Rational> lift_permutation_exact(const Frame& frame, const Permutation& perm);

}  // namespace orbitmm
