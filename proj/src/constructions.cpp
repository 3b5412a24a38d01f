#include "orbitmm/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <tuple>

namespace orbitmm {

std::string to_string(GroupTag g) {
  switch (g) {
    case GroupTag::S3: return "S3";
    case GroupTag::S4: return "S4";
    case GroupTag::A5: return "A5";
  }
  return "?";
}

int group_degree(GroupTag g) {
  switch (g) {
    case GroupTag::S3: return 3;
    case GroupTag::S4: return 4;
    case GroupTag::A5: return 5;
  }
  return 0;
}

std::vector<Permutation> group_elements(GroupTag g) {
  Permutation p = identity_permutation(group_degree(g));
  std::vector<Permutation> out;
  do {
    if (g != GroupTag::A5 || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_three_transitive(const std::vector<Permutation>& group) {
  if (group.empty()) return false;
  const int k = static_cast<int>(group.front().size());
  if (k < 3) return false;
  std::set<std::tuple<int, int, int>> hit;
  for (const auto& g : group) hit.emplace(g[0], g[1], g[2]);
  return hit.size() == static_cast<std::size_t>(k * (k - 1) * (k - 2));
}

namespace {

template <class T, class Lift>
Decomposition<T> orbit_sum(const Frame& frame, GroupTag group, const Permutation& sigma_perm, const Matrix<T>& m,
                           Lift lift) {
  const int n = frame.n;
  const auto elements = group_elements(group);
  if (static_cast<long>(elements.size()) != static_cast<long>(n) * n * n - n)
    throw std::invalid_argument("group " + to_string(group) + " has order " + std::to_string(elements.size()) +
                                ", need n^3 - n for n=" + std::to_string(n));
  if (static_cast<std::size_t>(group_degree(group)) != frame.size())
    throw std::invalid_argument("group degree does not match the frame size");
  if (!is_three_transitive(elements)) throw std::invalid_argument("group is not 3-transitive on the frame");
  if (sigma_perm.size() != frame.size() || sigma_perm == identity_permutation(static_cast<int>(frame.size())) ||
      compose(sigma_perm, compose(sigma_perm, sigma_perm)) != identity_permutation(static_cast<int>(frame.size())))
    throw std::invalid_argument("sigma_perm must have order 3");
  if (m.rows() != static_cast<std::size_t>(n) || !m.square()) throw std::invalid_argument("seed matrix must be n x n");

  const Matrix<T> sigma = lift(sigma_perm);
  const Matrix<T> sigma2 = sigma * sigma;
  const Matrix<T> m1 = m;
  const Matrix<T> m2 = sigma * m * sigma.transpose();
  const Matrix<T> m3 = sigma2 * m * sigma2.transpose();

  Decomposition<T> dec(n, Scheme::orbit);
  dec.add(identity_term<T>(n));
  for (const auto& g : elements) {
    const Matrix<T> rho = lift(g);
    const Matrix<T> rho_t = rho.transpose();
    dec.add({rho * m1 * rho_t, rho * m2 * rho_t, rho * m3 * rho_t});
  }
  dec.set_param("group", to_string(group));
  dec.set_param("frame", frame.label);
  return dec;
}

}  // namespace

Decomposition<double> orbit_decomposition(const Frame& frame, GroupTag group, const Permutation& sigma_perm,
                                          const Matrix<double>& m) {
  return orbit_sum<double>(frame, group, sigma_perm, m,
                           [&](const Permutation& p) { return lift_permutation(frame, p); });
}

Decomposition<double> orbit_decomposition(const OrbitSpec& spec) {
  if (spec.u.size() != static_cast<std::size_t>(spec.frame.n) || spec.v.size() != spec.u.size())
    throw std::invalid_argument("u and v must have length n");
  return orbit_decomposition(spec.frame, spec.group, spec.sigma_perm,
                             Matrix<double>::outer(std::span<const double>(spec.u), std::span<const double>(spec.v)));
}

Decomposition<Rational> orbit_decomposition_exact(const Frame& frame, GroupTag group, const Permutation& sigma_perm,
                                                  const Matrix<Rational>& m) {
  auto dec = orbit_sum<Rational>(frame, group, sigma_perm, m,
                                 [&](const Permutation& p) { return lift_permutation_exact(frame, p); });
  return dec;
}

OrbitSpec known_orbit_spec(int n) {
  OrbitSpec spec;
  switch (n) {
    case 2:
      spec.frame = fixture_frame("triangle-2");
      spec.group = GroupTag::S3;
      spec.u = {1.0, 0.0};
      spec.v = {-1.0, 1.0 / std::sqrt(3.0)};
      break;
    case 3: {
      spec.frame = fixture_frame("tetrahedron-3");
      spec.group = GroupTag::S4;
      const double su = 0.5 * std::sqrt(1.5);
      const double sv = std::sqrt(2.0 / 3.0);
      spec.u = {-su, su, su};
      spec.v = {sv, -sv, 0.0};
      break;
    }
    case 4: {
      spec.frame = fixture_frame("simplex-4");
      spec.group = GroupTag::A5;
      const auto& w1 = spec.frame.vectors[0];
      const auto& w2 = spec.frame.vectors[1];
      const double su = std::sqrt(6.0 / 5.0);
      const double sv = 2 * std::sqrt(2.0 / 15.0);
      for (std::size_t i = 0; i < 4; ++i) {
        spec.u.push_back(su * w1[i]);
        spec.v.push_back(sv * (w2[i] - w1[i]));
      }
      break;
    }
    default:
      throw std::invalid_argument("no single-orbit solution for n=" + std::to_string(n) + " (n must be 2, 3, or 4)");
  }
  spec.sigma_perm = cycle_permutation(static_cast<int>(spec.frame.size()), {0, 1, 2});
  return spec;
}

Matrix<Rational> s4_first_family_matrix() {
  const Rational h = make_rational(1, 2);
  return Matrix<Rational>{{-h, h, Rational(0)}, {h, -h, Rational(0)}, {h, -h, Rational(0)}};
}

Matrix<Rational> s4_second_family_matrix() {
  const Rational h = make_rational(1, 2);
  const Rational z(0);
  return Matrix<Rational>{{-h, h, h}, {z, z, z}, {h, -h, -h}};
}

std::vector<SymbolicTerm> lattice_symbolic_terms(int n) {
  if (n < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  const Rational c = make_rational(n, n + 1);
  const Rational one(1);
  auto factor = [&](int ket, int bra_to) {
    SymbolicFactor f;
    f.ket.coeffs = {{ket, c}};
    f.bra.coeffs = {{bra_to, one}, {ket, -one}};
    return f;
  };
  std::vector<SymbolicTerm> terms;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        SymbolicTerm t;
        t.triple = {i, j, k};
        t.slots = {factor(i, j), factor(j, k), factor(k, i)};
        terms.push_back(std::move(t));
      }
  return terms;
}

Vector<double> evaluate(const FrameCombination& combo, const Frame& frame) {
  Vector<double> out(static_cast<std::size_t>(frame.n), 0.0);
  for (const auto& [idx, coeff] : combo.coeffs) {
    const double c = to_double(coeff);
    const auto& w = frame.vectors.at(static_cast<std::size_t>(idx));
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += c * w[r];
  }
  return out;
}

Decomposition<double> lattice_decomposition(const Frame& frame) {
  if (!frame.is_simplex()) throw std::invalid_argument("lattice_decomposition requires a simplex frame");
  Decomposition<double> dec(frame.n, Scheme::lattice);
  dec.add(identity_term<double>(frame.n));
  for (const auto& t : lattice_symbolic_terms(frame.n)) {
    std::array<Matrix<double>, 3> f;
    for (std::size_t s = 0; s < 3; ++s) {
      auto ket = evaluate(t.slots[s].ket, frame);
      auto bra = evaluate(t.slots[s].bra, frame);
      f[s] = Matrix<double>::outer(std::span<const double>(ket), std::span<const double>(bra));
    }
    dec.add({std::move(f[0]), std::move(f[1]), std::move(f[2])});
  }
  dec.set_param("frame", frame.label);
  return dec;
}

UnitAngle UnitAngle::radians(double theta) { return {std::cos(theta), std::sin(theta)}; }

UnitAngle UnitAngle::sixths(int k) {
  const double h = std::sqrt(3.0) / 2;
  const double cos_table[12] = {1, h, 0.5, 0, -0.5, -h, -1, -h, -0.5, 0, 0.5, h};
  const double sin_table[12] = {0, 0.5, h, 1, h, 0.5, 0, -0.5, -h, -1, -h, -0.5};
  const int i = ((k % 12) + 12) % 12;
  return {cos_table[i], sin_table[i]};
}

UnitAngle UnitAngle::plus(const UnitAngle& o) const {
  return {cos * o.cos - sin * o.sin, sin * o.cos + cos * o.sin};
}

double UnitAngle::value() const { return std::atan2(sin, cos); }

Decomposition<double> strassen_theta(UnitAngle theta) {
  const Frame frame = fixture_frame("triangle-2");
  const Permutation sigma_perm = cycle_permutation(3, {0, 1, 2});
  const Matrix<double> sigma = lift_permutation(frame, sigma_perm);
  OrbitSpec spec{frame, GroupTag::S3, sigma_perm, {theta.cos, theta.sin}, {}};
  Vector<double> su = sigma * spec.u;
  spec.v = {2.0 / 3.0 * (su[0] - spec.u[0]), 2.0 / 3.0 * (su[1] - spec.u[1])};
  auto dec = orbit_decomposition(spec);
  Decomposition<double> out(2, Scheme::strassen_theta);
  for (const auto& t : dec.terms()) out.add(t);
  out.set_param("group", "S3");
  out.set_param("frame", frame.label);
  return out;
}

Decomposition<double> strassen_theta(double theta) { return strassen_theta(UnitAngle::radians(theta)); }

std::string S4Variant::name() const {
  return std::string(carrier == Carrier::u ? "u" : "v") + (sign < 0 ? "-" : "+");
}

S4Variant S4Variant::parse(const std::string& name) {
  if (name.size() != 2 || (name[0] != 'u' && name[0] != 'v') || (name[1] != '-' && name[1] != '+'))
    throw std::invalid_argument("variant must be one of u-, u+, v-, v+ (got '" + name + "')");
  return {name[0] == 'u' ? Carrier::u : Carrier::v, name[1] == '-' ? -1 : 1};
}

Vector<double> s4_y(UnitAngle theta) {
  const double h = std::sqrt(3.0) / 2;
  const double s = -std::sqrt(2.0 / 3.0);
  const double c0 = theta.cos;
  const double c1 = -0.5 * theta.cos + h * theta.sin;  // cos(t - 2pi/3)
  const double c2 = -0.5 * theta.cos - h * theta.sin;  // cos(t - 4pi/3)
  return {s * c0, s * c1, s * c2};
}

std::pair<Vector<double>, Vector<double>> s4_family_vectors(S4Variant variant, UnitAngle theta) {
  const Frame tet = fixture_frame("tetrahedron-3");
  const Matrix<double> sigma = lift_permutation(tet, cycle_permutation(4, {0, 1, 2}));
  const Vector<double> y = s4_y(theta);
  const Vector<double> sy = sigma * y;
  Vector<double> z(3);
  for (std::size_t i = 0; i < 3; ++i) z[i] = 2.0 / 3.0 * (sy[i] - y[i]);
  const Vector<double> corner{-1, -1, -1};
  Vector<double> u = y, v = z;
  if (variant.carrier == S4Variant::Carrier::u) {
    const double a = variant.sign / (2 * std::sqrt(6.0));
    for (std::size_t i = 0; i < 3; ++i) u[i] += a * corner[i];
  } else {
    const double b = variant.sign / (3 * std::sqrt(2.0));
    for (std::size_t i = 0; i < 3; ++i) v[i] += b * corner[i];
  }
  return {u, v};
}

Decomposition<double> s4_family(S4Variant variant, UnitAngle theta) {
  auto [u, v] = s4_family_vectors(variant, theta);
  OrbitSpec spec{fixture_frame("tetrahedron-3"), GroupTag::S4, cycle_permutation(4, {0, 1, 2}), u, v};
  auto dec = orbit_decomposition(spec);
  Decomposition<double> out(3, Scheme::s4_family);
  for (const auto& t : dec.terms()) out.add(t);
  out.set_param("group", "S4");
  out.set_param("frame", spec.frame.label);
  out.set_param("variant", variant.name());
  return out;
}

int s4_valid_sixths(S4Variant variant) {
  if (variant.carrier == S4Variant::Carrier::u) return variant.sign < 0 ? 0 : 2;
  return variant.sign < 0 ? 3 : 1;
}

S5Fixture s5_fixture() {
  const Frame f = fixture_frame("s5-pair-5");
  S5Fixture fx;
  fx.sigma = *f.sigma;
  fx.w1 = f.vectors[0];
  fx.w2 = f.vectors[1];
  fx.u = fx.w1;
  fx.v.resize(5);
  for (std::size_t i = 0; i < 5; ++i) fx.v[i] = 5.0 / 6.0 * (fx.w2[i] - fx.w1[i]);
  return fx;
}

}  // namespace orbitmm
