#pragma once

#include "orbitmm/frames.hpp"
#include "orbitmm/tensor.hpp"

#include <array>
#include <string>
#include <vector>

namespace orbitmm {

enum class GroupTag { S3, S4, A5 };

std::string to_string(GroupTag g);
/// Size of the permuted point set: 3, 4, 5.
int group_degree(GroupTag g);

/// Group elements as permutations of frame indices, in lexicographic order of
/// their one-line notation (identity first). A5 keeps the even permutations of S5.
std::vector<Permutation> group_elements(GroupTag g);

/// True when every ordered triple of distinct points is hit by some element.
bool is_three_transitive(const std::vector<Permutation>& group);

/// One orbit of a rank-1 tensor m (x) sigma m sigma^T (x) sigma^2 m sigma^2T under
/// the diagonal conjugation action, plus the identity term.
struct OrbitSpec {
  Frame frame;
  GroupTag group = GroupTag::S3;
  Permutation sigma_perm;  ///< the 3-cycle (123) on the frame indices
  Vector<double> u, v;
};

/// 1(x)1(x)1 followed by one term per group element, in group_elements order.
/// Throws std::invalid_argument if |G| != n^3 - n, the group is not 3-transitive,
/// or sigma_perm is not of order 3.
Decomposition<double> orbit_decomposition(const OrbitSpec& spec);

/// Same orbit, seeded by an arbitrary matrix m instead of |u><v|.
Decomposition<double> orbit_decomposition(const Frame& frame, GroupTag group, const Permutation& sigma_perm,
                                          const Matrix<double>& m);

/// Exact orbit over frames with rational coordinates (the tetrahedron).
Decomposition<Rational> orbit_decomposition_exact(const Frame& frame, GroupTag group, const Permutation& sigma_perm,
                                                  const Matrix<Rational>& m);

/// Known solutions on the fixture frames: n = 2 (S3, triangle), 3 (S4,
/// tetrahedron, first family), 4 (A5, simplex-4).
OrbitSpec known_orbit_spec(int n);

/// The all-rational n = 3 seed 1/2 [[-1,1,0],[1,-1,0],[1,-1,0]].
Matrix<Rational> s4_first_family_matrix();
/// 1/2 [[-1,1,1],[0,0,0],[1,-1,-1]].
Matrix<Rational> s4_second_family_matrix();

// Lattice construction, kept symbolic over frame indices so the exact verifier
// and the float builder share one term list.

/// sum_k coeff_k w_{index_k}
struct FrameCombination {
  std::vector<std::pair<int, Rational>> coeffs;
};

/// |ket><bra|
struct SymbolicFactor {
  FrameCombination ket, bra;
};

struct SymbolicTerm {
  std::array<int, 3> triple{};
  std::array<SymbolicFactor, 3> slots;
};

/// One term per ordered triple (i, j, k) of distinct indices in 0..n, lexicographic:
/// (n/(n+1)) |w_i><w_j - w_i| (x) (n/(n+1)) |w_j><w_k - w_j| (x) (n/(n+1)) |w_k><w_i - w_k|.
/// The identity term is not included.
std::vector<SymbolicTerm> lattice_symbolic_terms(int n);

Vector<double> evaluate(const FrameCombination& combo, const Frame& frame);

/// 1(x)1(x)1 followed by the symbolic terms evaluated on the frame; rank n^3 - n + 1.
Decomposition<double> lattice_decomposition(const Frame& frame);

/// Angle carried as (cos, sin) so that multiples of pi/6 stay exact to rounding of sqrt(3)/2.
struct UnitAngle {
  double cos = 1;
  double sin = 0;

  static UnitAngle radians(double theta);
  static UnitAngle sixths(int k);  ///< k * pi/6 from a table
  UnitAngle plus(const UnitAngle& o) const;
  double value() const;  ///< in (-pi, pi]
};

/// u = (cos t, sin t), v = (2/3)(sigma u - u), orbit over S3 on the triangle fixture.
Decomposition<double> strassen_theta(UnitAngle theta);
Decomposition<double> strassen_theta(double theta);

struct S4Variant {
  enum class Carrier { u, v };
  Carrier carrier = Carrier::u;  ///< which vector carries the (-1,-1,-1) component
  int sign = -1;                 ///< sign of a = +-1/(2 sqrt 6) or b = +-1/(3 sqrt 2)

  std::string name() const;  ///< "u-", "u+", "v-", "v+"
  static S4Variant parse(const std::string& name);
};

/// y(t) = -sqrt(2/3) (cos t, cos(t - 2pi/3), cos(t - 4pi/3)), a unit vector in the
/// plane rotated by sigma = rho((123)).
Vector<double> s4_y(UnitAngle theta);

/// u, v of the two n = 3 families with z = (2/3)(sigma y - y); the offset direction
/// is the unnormalized tetrahedron corner (-1,-1,-1).
std::pair<Vector<double>, Vector<double>> s4_family_vectors(S4Variant variant, UnitAngle theta);

Decomposition<double> s4_family(S4Variant variant, UnitAngle theta);

/// Smallest k in 0..11 such that k*pi/6 is a solution angle of the variant.
int s4_valid_sixths(S4Variant variant);

struct S5Fixture {
  Matrix<double> sigma;
  Vector<double> w1, w2, u, v;
};

/// sigma = rho((123)) in the Young orthogonal basis of the (3,2) irrep of S5,
/// w2 = sigma w1, u = w1, v = (5/6)(w2 - w1).
S5Fixture s5_fixture();

}  // namespace orbitmm
