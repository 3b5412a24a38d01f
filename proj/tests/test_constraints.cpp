#include "doctest.h"
#include "orbitmm/constraints.hpp"
#include "orbitmm/constructions.hpp"
#include "orbitmm/verify.hpp"

#include <cmath>

using namespace orbitmm;

namespace {

const double r3 = std::sqrt(3.0);

Matrix<double> sigma_of(const Frame& f) {
  return lift_permutation(f, cycle_permutation(static_cast<int>(f.size()), {0, 1, 2}));
}

Matrix<double> seed_of(const OrbitSpec& s) {
  return Matrix<double>::outer(std::span<const double>(s.u), std::span<const double>(s.v));
}

}  // namespace

TEST_CASE("necessary conditions") {
  const Frame tri = fixture_frame("triangle-2");
  const Matrix<double> sigma2 = sigma_of(tri);
  CHECK(within(necessary_conditions({1, 0}, {-1, 1 / r3}, sigma2), kNecessaryTarget, 1e-12));

  const S5Fixture fx = s5_fixture();
  CHECK(within(necessary_conditions(fx.u, fx.v, fx.sigma), kNecessaryTarget));

  const auto bad = necessary_conditions({1, 0}, {1, 0}, sigma2);
  CHECK(bad[0] == doctest::Approx(1.0));
  CHECK(bad[1] == doctest::Approx(-0.5));
  CHECK(bad[2] == doctest::Approx(-0.5));
  CHECK_FALSE(within(bad, kNecessaryTarget));

  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const OrbitSpec spec = known_orbit_spec(n);
    CHECK(within(necessary_conditions(spec.u, spec.v, sigma_of(spec.frame)), kNecessaryTarget));
    const long g = n * n * n - n;
    for (double r : trace_identity_residuals(n, g, spec.u, spec.v, sigma_of(spec.frame))) CHECK(std::fabs(r) < 1e-8);
  }

  const Matrix<double> phi{{1, 0}, {0, -1}};
  CHECK_THROWS_AS(necessary_conditions({1, 0}, {1, 0}, phi), std::invalid_argument);
  CHECK_THROWS_AS(necessary_conditions({1, 0}, {1, 0}, Matrix<double>{{2, 0}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(necessary_conditions({1, 0, 0}, {1, 0}, sigma2), std::invalid_argument);
}

TEST_CASE("z_from_y") {
  const Matrix<double> sigma2 = sigma_of(fixture_frame("triangle-2"));
  const auto z2 = z_from_y({1, 0}, sigma2);
  CHECK(z2[0] == doctest::Approx(-1.0));
  CHECK(z2[1] == doctest::Approx(1 / r3));

  // n = 3: (2/3)(sigma y - y) = +(2/sqrt3) y(theta + 5pi/6)
  const Matrix<double> sigma3 = s4_sigma();
  const auto z3 = z_from_y(s4_y(UnitAngle::sixths(0)), sigma3);
  const auto y5 = s4_y(UnitAngle::sixths(5));
  for (std::size_t i = 0; i < 3; ++i) CHECK(z3[i] == doctest::Approx(2 / r3 * y5[i]).epsilon(1e-14));
  for (int k = 0; k < 12; ++k) {
    const auto z = z_from_y(s4_y(UnitAngle::sixths(k)), sigma3);
    const auto y = s4_y(UnitAngle::sixths(k + 5));
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::fabs(z[i] - 2 / r3 * y[i]) < 1e-14);
  }

  const auto fixed = z_from_y({1 / r3, 1 / r3, 1 / r3}, sigma3);
  for (double x : fixed) CHECK(std::fabs(x) < 1e-15);
  CHECK_THROWS_AS(z_from_y({2, 0}, sigma2), std::invalid_argument);
}

TEST_CASE("S4 basis") {
  const S4Basis b = s4_basis();
  const auto all = b.all();
  CHECK(all.size() == 9);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      if (i != j) CHECK(std::fabs(frobenius(*all[i], *all[j])) < 1e-15);
  CHECK(trace(b.beta_x) == doctest::Approx(0.0));
  CHECK(trace(b.beta_y) == doctest::Approx(0.0));
  for (int i = 0; i < 3; ++i) {
    CHECK(b.s[i] == b.s[i].transpose());
    CHECK(trace(b.s[i]) == 0.0);
    CHECK(b.a[i] == -b.a[i].transpose());
  }
  const Frame tet = fixture_frame("tetrahedron-3");
  CHECK(max_abs_diff(s4_sigma(), sigma_of(tet)) < 1e-12);
}

TEST_CASE("S4 constraint values") {
  const double su = 0.5 * std::sqrt(1.5), sv = std::sqrt(2.0 / 3.0);
  CHECK(within(s4_constraints({-su, su, su}, {sv, -sv, 0}), kS4Target, 1e-12));
  CHECK(within(s4_constraints({1, 0, -1}, {-0.5, 0.5, 0.5}), kS4Target, 1e-12));

  const auto e1 = s4_constraints({1, 0, 0}, {1, 0, 0});
  CHECK(e1[0] == 0.0);
  CHECK(e1[1] == 0.0);
  CHECK(e1[2] == doctest::Approx(0.25));
  CHECK_FALSE(within(e1, kS4Target));

  for (const char* name : {"u-", "u+", "v-", "v+"}) {
    CAPTURE(name);
    const S4Variant v = S4Variant::parse(name);
    const auto [u, w] = s4_family_vectors(v, UnitAngle::sixths(s4_valid_sixths(v)));
    CHECK(within(s4_constraints(u, w), kS4Target, 1e-12));
  }
  CHECK_THROWS_AS(s4_constraints({1, 0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("S4 constraint values under conjugation of the seed") {
  // Only the third value is invariant under all of S4; the pair sums keep their
  // targets on 12 of the 24 conjugates. Every conjugate seed that still yields a
  // valid decomposition hits the targets.
  const Frame tet = fixture_frame("tetrahedron-3");
  const OrbitSpec spec = known_orbit_spec(3);
  const Matrix<double> m = seed_of(spec);
  const auto base = s4_constraints(spec.u, spec.v);
  int on_target = 0, valid = 0;
  for (const auto& g : group_elements(GroupTag::S4)) {
    const Matrix<double> rho = lift_permutation(tet, g);
    const auto c = s4_constraints(rho * spec.u, rho * spec.v);
    CHECK(c[2] == doctest::Approx(base[2]).epsilon(1e-12));
    const bool hit = within(c, kS4Target);
    on_target += hit;
    const auto dec = orbit_decomposition(tet, GroupTag::S4, spec.sigma_perm, rho * m * rho.transpose());
    if (verify_float(dec).residual < 1e-10) {
      ++valid;
      CHECK(hit);
    }
  }
  CHECK(on_target == 12);
  CHECK(valid == 6);

  const Matrix<double> rho = lift_permutation(tet, Permutation{0, 3, 1, 2});
  const auto off = s4_constraints(rho * spec.u, rho * spec.v);
  CHECK(off[0] == doctest::Approx(-0.75));
  CHECK(off[1] == doctest::Approx(-0.25));
}

TEST_CASE("transpose_transform") {
  const Frame tet = fixture_frame("tetrahedron-3");
  const Matrix<Rational> tau = lift_permutation_exact(tet, cycle_permutation(4, {1, 2}));
  CHECK(transpose_transform(s4_first_family_matrix(), tau) == s4_second_family_matrix());
  const Matrix<Rational> once = transpose_transform(s4_first_family_matrix(), tau);
  CHECK(transpose_transform(once, tau) == s4_first_family_matrix());

  const Matrix<double> sym{{1, 2}, {2, 3}};
  CHECK(transpose_transform(sym, Matrix<double>::identity(2)) == sym);
  CHECK_THROWS_AS(transpose_transform(sym, Matrix<double>(2, 2)), std::domain_error);
  CHECK_THROWS_AS(transpose_transform(sym, Matrix<double>::identity(3)), std::invalid_argument);
}

TEST_CASE("transposed seeds give valid decompositions") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    const OrbitSpec spec = known_orbit_spec(n);
    const Matrix<double> tau = lift_permutation(spec.frame, cycle_permutation(static_cast<int>(spec.frame.size()), {1, 2}));
    CHECK(inverts_sigma(tau, sigma_of(spec.frame)));
    const Matrix<double> m = transpose_transform(seed_of(spec), tau);
    const auto dec = orbit_decomposition(spec.frame, spec.group, spec.sigma_perm, m);
    CHECK(verify_float(dec).residual < 1e-9);
  }
  const Frame tri = fixture_frame("triangle-2");
  CHECK(max_abs_diff(lift_permutation(tri, cycle_permutation(3, {1, 2})), Matrix<double>{{1, 0}, {0, -1}}) < 1e-12);
  CHECK_FALSE(inverts_sigma(Matrix<double>::identity(2), sigma_of(tri)));
}
