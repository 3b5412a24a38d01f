#include "orbitmm/cli.hpp"

#include "orbitmm/bilinear.hpp"
#include "orbitmm/constraints.hpp"
#include "orbitmm/constructions.hpp"
#include "orbitmm/fourier2.hpp"
#include "orbitmm/io.hpp"
#include "orbitmm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace orbitmm {

namespace {

using json = nlohmann::json;

/// Raised for conditions that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string vec_string(const std::array<double, 3>& v) {
  return "(" + fmt("%.12g", v[0]) + ", " + fmt("%.12g", v[1]) + ", " + fmt("%.12g", v[2]) + ")";
}

Decomposition<double> as_float(const AnyDecomposition& any) {
  if (const auto* d = std::get_if<Decomposition<double>>(&any)) return *d;
  return std::get<Decomposition<Rational>>(any).cast<double>();
}

AnyDecomposition load_or_usage(const std::string& path) {
  try {
    return load_decomposition(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::string summary(const AnyDecomposition& any) {
  return std::visit(
      [](const auto& d) {
        std::string s = "n=" + std::to_string(d.n()) + " scheme=" + to_string(d.scheme()) +
                        " rank=" + std::to_string(d.rank());
        for (const auto& [k, v] : d.params()) s += " " + k + "=" + v;
        return s;
      },
      any);
}

// ---- gen ----

struct GenOptions {
  int n = 0;
  std::string scheme;
  std::optional<int> theta_sixths;
  std::optional<double> theta;
  std::string variant = "u-";
  std::string frame = "simplex";
  bool exact = false;
  std::string output;
};

UnitAngle angle_of(const GenOptions& o, int default_sixths, std::string& label) {
  if (o.theta) {
    label = format_double(*o.theta);
    return UnitAngle::radians(*o.theta);
  }
  const int k = o.theta_sixths.value_or(default_sixths);
  label = std::to_string(k);
  return UnitAngle::sixths(k);
}

Frame frame_by_name(const std::string& name, int n) {
  if (name == "simplex") return simplex_frame(n);
  Frame f = fixture_frame(name);
  if (f.n != n) throw UsageError("frame " + name + " has n=" + std::to_string(f.n) + ", not " + std::to_string(n));
  return f;
}

AnyDecomposition generate(const GenOptions& o) {
  const int n = o.n;
  if (n < 1) throw UsageError("--n must be >= 1");
  const bool has_theta = o.theta || o.theta_sixths;
  if (o.scheme != "strassen-theta" && o.scheme != "s4-family" && has_theta)
    throw UsageError("--theta/--theta-sixths only apply to strassen-theta and s4-family");
  if (o.exact && o.scheme != "orbit") throw UsageError("--exact only applies to the orbit scheme");

  if (o.scheme == "lattice") {
    try {
      return lattice_decomposition(frame_by_name(o.frame, n));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (o.scheme == "orbit") {
    if (n < 2 || n > 4) throw UsageError("scheme orbit needs n in {2, 3, 4}");
    if (o.exact) {
      if (n != 3) throw UsageError("--exact orbit decompositions exist only for n=3");
      const Frame tet = fixture_frame("tetrahedron-3");
      return orbit_decomposition_exact(tet, GroupTag::S4, cycle_permutation(4, {0, 1, 2}), s4_first_family_matrix());
    }
    return orbit_decomposition(known_orbit_spec(n));
  }
  if (o.scheme == "strassen-theta") {
    if (n != 2) throw UsageError("scheme strassen-theta needs n=2");
    std::string label;
    auto dec = strassen_theta(angle_of(o, 0, label));
    dec.set_param(o.theta ? "theta" : "theta_sixths", label);
    return dec;
  }
  if (o.scheme == "s4-family") {
    if (n != 3) throw UsageError("scheme s4-family needs n=3");
    S4Variant variant;
    try {
      variant = S4Variant::parse(o.variant);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::string label;
    auto dec = s4_family(variant, angle_of(o, s4_valid_sixths(variant), label));
    dec.set_param(o.theta ? "theta" : "theta_sixths", label);
    return dec;
  }
  throw UsageError("unknown scheme " + o.scheme);
}

int command_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  const AnyDecomposition dec = generate(o);
  const std::string doc = write_decomposition(dec);
  if (o.output.empty()) {
    out << doc;
    err << summary(dec) << "\n";
  } else {
    try {
      write_file(o.output, doc);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    out << summary(dec) << "\n";
  }
  return kExitValid;
}

// ---- verify ----

struct VerifyOptions {
  std::string file;
  std::string mode = "float";
  double tol = kDefaultTol;
  bool json_output = false;
};

template <class T>
json invariants_json(const InvariantsReport<T>& r) {
  json j;
  j["n"] = r.n;
  j["terms"] = r.terms;
  if constexpr (std::is_same_v<T, double>) {
    j["trace"] = r.trace;
    j["self_inner"] = r.self_inner;
    j["inner_with_mm"] = r.inner_with_mm;
  } else {
    j["trace"] = to_fraction_string(r.trace);
    j["self_inner"] = to_fraction_string(r.self_inner);
    j["inner_with_mm"] = to_fraction_string(r.inner_with_mm);
  }
  j["factor_ranks"] = r.factor_ranks;
  return j;
}

std::string scalar_text(double x) { return fmt("%.12g", x); }
std::string scalar_text(const Rational& x) { return to_fraction_string(x); }

template <class T>
void print_invariants(std::ostream& out, const InvariantsReport<T>& r) {
  const long n3 = static_cast<long>(r.n) * r.n * r.n;
  out << "terms:          " << r.terms << "\n";
  out << "operator trace: " << scalar_text(r.trace) << " (valid: " << r.n << ")\n";
  out << "<D, D>:         " << scalar_text(r.self_inner) << " (valid: " << n3 << ")\n";
  out << "<D, MM>:        " << scalar_text(r.inner_with_mm) << " (valid: " << n3 << ")\n";
  std::size_t rank1 = 0;
  for (const auto& fr : r.factor_ranks)
    if (fr[0] <= 1 && fr[1] <= 1 && fr[2] <= 1) ++rank1;
  out << "rank-1 terms:   " << rank1 << " of " << r.terms << "\n";
}

Frame frame_from_params(const Decomposition<double>& dec) {
  const std::string label = dec.param("frame", "simplex");
  try {
    return frame_by_name(label, dec.n());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int command_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const AnyDecomposition any = load_or_usage(o.file);
  const Decomposition<double> dec = as_float(any);
  json record;
  record["file"] = o.file;
  record["mode"] = o.mode;
  bool valid = false;

  if (!o.json_output) out << summary(any) << "\n";
  if (o.mode == "float") {
    const FloatReport rep = verify_float(dec, o.tol);
    valid = rep.valid;
    record["residual"] = rep.residual;
    record["tol"] = rep.tol;
    if (!o.json_output) out << "residual:       " << fmt("%.6e", rep.residual) << " (tol " << fmt("%g", o.tol) << ")\n";
  } else if (o.mode == "exact-gram") {
    if (dec.scheme() != Scheme::lattice) throw UsageError("exact-gram mode needs a lattice decomposition file");
    const Frame frame = frame_from_params(dec);
    if (!frame.is_simplex()) throw UsageError("exact-gram mode needs a simplex frame");
    const Decomposition<double> regen = lattice_decomposition(frame);
    bool same = regen.rank() == dec.rank();
    for (std::size_t i = 0; same && i < dec.rank(); ++i) {
      const auto& x = dec.terms()[i];
      const auto& y = regen.terms()[i];
      same = max_abs_diff(x.a, y.a) < 1e-12 && max_abs_diff(x.b, y.b) < 1e-12 && max_abs_diff(x.c, y.c) < 1e-12;
    }
    if (!same) {
      err << "file terms do not match the lattice construction on frame " << frame.label << "\n";
      record["residual"] = nullptr;
      valid = false;
      if (!o.json_output) out << "residual:       terms differ from the lattice construction\n";
    } else {
      const ExactGramReport rep = verify_exact_gram_report(frame);
      valid = is_zero(rep.residual);
      record["residual"] = to_fraction_string(rep.residual);
      record["gram_self_inner"] = to_fraction_string(rep.dd);
      record["gram_inner_with_mm"] = to_fraction_string(rep.dm);
      if (!o.json_output)
        out << "residual:       " << (valid ? std::string("0 (exact)") : to_fraction_string(rep.residual)) << "\n";
    }
  } else if (o.mode == "exact") {
    const auto* exact = std::get_if<Decomposition<Rational>>(&any);
    if (!exact) throw UsageError("exact mode needs a rational decomposition file");
    const ExactReport rep = verify_exact(*exact);
    valid = rep.valid;
    record["residual"] = to_fraction_string(rep.max_abs_residual);
    if (!o.json_output)
      out << "residual:       " << (valid ? std::string("0 (exact)") : to_fraction_string(rep.max_abs_residual))
          << "\n";
  } else {
    throw UsageError("unknown mode " + o.mode);
  }

  std::visit(
      [&](const auto& d) {
        const auto inv = invariants_report(d);
        if (o.json_output)
          record["invariants"] = invariants_json(inv);
        else
          print_invariants(out, inv);
      },
      any);
  record["valid"] = valid;
  if (o.json_output)
    out << record.dump() << "\n";
  else
    out << (valid ? "VALID" : "INVALID") << "\n";
  return valid ? kExitValid : kExitInvalid;
}

// ---- analyze ----

struct AnalyzeOptions {
  std::string file;
  std::string builtin;
};

/// m = u v^T for a rank-1 m, normalized at the entry of largest magnitude.
std::pair<Vector<double>, Vector<double>> split_rank1(const Matrix<double>& m) {
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (std::fabs(m(i, j)) > std::fabs(m(bi, bj))) bi = i, bj = j;
  if (m(bi, bj) == 0.0 || matrix_rank(m) != 1) throw UsageError("seed factor is not rank 1");
  Vector<double> u(m.rows()), v(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) u[i] = m(i, bj);
  for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(bi, j) / m(bi, bj);
  return {u, v};
}

Matrix<double> sigma_for(int n) {
  switch (n) {
    case 2:
      return lift_permutation(fixture_frame("triangle-2"), cycle_permutation(3, {0, 1, 2}));
    case 3:
      return lift_permutation(fixture_frame("tetrahedron-3"), cycle_permutation(4, {0, 1, 2}));
    case 4:
      return lift_permutation(fixture_frame("simplex-4"), cycle_permutation(5, {0, 1, 2}));
    case 5:
      return *fixture_frame("s5-pair-5").sigma;
    default:
      throw UsageError("no analysis available for n=" + std::to_string(n));
  }
}

struct Analysis {
  int n = 0;
  std::optional<Decomposition<double>> dec;  ///< for the Fourier table
  Vector<double> u, v;
  Matrix<double> sigma;
};

Analysis analysis_from_builtin(const std::string& name) {
  Analysis a;
  if (name == "strassen") {
    a.dec = strassen_theta(UnitAngle::sixths(0));
  } else if (name == "s4-first" || name == "a5") {
    const OrbitSpec spec = known_orbit_spec(name == "a5" ? 4 : 3);
    a.n = spec.frame.n;
    a.u = spec.u;
    a.v = spec.v;
  } else if (name == "s4-second") {
    a.n = 3;
    std::tie(a.u, a.v) = split_rank1(s4_second_family_matrix().cast<double>());
  } else if (name == "s5") {
    const S5Fixture fx = s5_fixture();
    a.n = 5;
    a.u = fx.u;
    a.v = fx.v;
  } else {
    throw UsageError("unknown builtin " + name + " (strassen, s4-first, s4-second, s5, a5)");
  }
  if (a.dec) {
    a.n = a.dec->n();
    std::tie(a.u, a.v) = split_rank1(a.dec->terms().at(1).a);
  }
  a.sigma = sigma_for(a.n);
  return a;
}

Analysis analysis_from_file(const std::string& path) {
  Analysis a;
  a.dec = as_float(load_or_usage(path));
  a.n = a.dec->n();
  if (a.n < 2 || a.n > 5) throw UsageError("no analysis available for n=" + std::to_string(a.n));
  const auto& terms = a.dec->terms();
  const auto id = Matrix<double>::identity(static_cast<std::size_t>(a.n));
  if (terms.size() < 2 || max_abs_diff(terms[0].a, id) > 1e-12)
    throw UsageError("analysis expects an identity term followed by the orbit seed");
  std::tie(a.u, a.v) = split_rank1(terms[1].a);
  a.sigma = sigma_for(a.n);
  return a;
}

int command_analyze(const AnalyzeOptions& o, std::ostream& out) {
  if (o.file.empty() == o.builtin.empty()) throw UsageError("analyze needs exactly one of FILE or --builtin");
  const Analysis a = o.builtin.empty() ? analysis_from_file(o.file) : analysis_from_builtin(o.builtin);
  bool ok = true;

  if (a.n == 2 && a.dec) {
    const auto coeffs = fourier_coefficients(tensor_of(*a.dec));
    out << "Fourier coefficients (nonzero):\n";
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int z = 0; z < 4; ++z)
          if (std::fabs(coeffs(x, y, z)) > 1e-12)
            out << "  " << fourier2_name(x) << " " << fourier2_name(y) << " " << fourier2_name(z) << ": "
                << fmt("%.12g", coeffs(x, y, z)) << "\n";
    const Matrix<double> m = Matrix<double>::outer(std::span<const double>(a.u), std::span<const double>(a.v));
    const auto eq = strassen_equations(m);
    out << "Strassen equation residuals:";
    double worst = 0;
    for (double r : eq) {
      out << " " << fmt("%.3e", r);
      worst = std::max(worst, std::fabs(r));
    }
    out << "\n";
    ok = ok && worst < 1e-10;
  }
  if (a.n == 3) {
    const auto s4 = s4_constraints(a.u, a.v);
    const bool s4_ok = within(s4, kS4Target);
    out << "S4 constraints: " << vec_string(s4) << " target " << vec_string(kS4Target) << (s4_ok ? " ok" : " FAIL")
        << "\n";
    ok = ok && s4_ok;
  }
  const auto nc = necessary_conditions(a.u, a.v, a.sigma);
  const bool nc_ok = within(nc, kNecessaryTarget);
  out << "necessary conditions: " << vec_string(nc) << " target " << vec_string(kNecessaryTarget)
      << (nc_ok ? " ok" : " FAIL") << "\n";
  ok = ok && nc_ok;
  return ok ? kExitValid : kExitInvalid;
}

// ---- multiply / bench ----

struct MultiplyOptions {
  std::string file, a_file, b_file, output;
  std::size_t cutoff = 1;
  bool force = false;
};

Matrix<double> matrix_or_usage(const std::string& path) {
  try {
    return read_matrix(read_file(path));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

int command_multiply(const MultiplyOptions& o, std::ostream& out, std::ostream& err) {
  const BilinearAlgorithm algo(as_float(load_or_usage(o.file)));
  const Matrix<double> a = matrix_or_usage(o.a_file);
  const Matrix<double> b = matrix_or_usage(o.b_file);
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw UsageError("operands must be square and of equal size: " + a.shape() + " * " + b.shape());
  if (o.cutoff < 1) throw UsageError("--cutoff must be >= 1");
  if (!algo.valid()) {
    err << "warning: decomposition is not valid (residual " << fmt("%.3e", algo.residual()) << ")\n";
    if (!o.force) return kExitInvalid;
  }
  const MulReport rep = multiply_recursive(algo, a, b, o.cutoff);
  const std::string text = write_matrix(rep.result);
  if (o.output.empty()) {
    out << text;
  } else {
    try {
      write_file(o.output, text);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  err << "scalar multiplications: " << rep.scalar_multiplications << ", depth " << rep.recursion_depth << "\n";
  return kExitValid;
}

struct BenchOptions {
  std::string file;
  std::vector<std::size_t> sizes{64, 128, 256};
  std::size_t cutoff = 1;
  bool json_output = false;
  bool force = false;
};

int command_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  const BilinearAlgorithm algo(as_float(load_or_usage(o.file)));
  if (o.cutoff < 1) throw UsageError("--cutoff must be >= 1");
  if (!algo.valid()) {
    err << "warning: decomposition is not valid (residual " << fmt("%.3e", algo.residual()) << ")\n";
    if (!o.force) return kExitInvalid;
  }
  const auto rows = benchmark(algo, o.sizes, o.cutoff);
  if (o.json_output) {
    for (const auto& r : rows) {
      json j;
      j["size"] = r.size;
      j["padded"] = r.padded;
      j["recursive_seconds"] = r.recursive_seconds;
      j["naive_seconds"] = r.naive_seconds;
      j["recursive_mults"] = r.recursive_mults;
      j["naive_mults"] = r.naive_mults;
      j["exponent"] = r.exponent;
      j["max_rel_error"] = r.max_rel_error;
      out << j.dump() << "\n";
    }
    return kExitValid;
  }
  char line[256];
  std::snprintf(line, sizeof line, "%8s %8s %14s %14s %12s %12s %9s %11s\n", "size", "padded", "rec_mults",
                "naive_mults", "rec_s", "naive_s", "exponent", "rel_err");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%8zu %8zu %14llu %14llu %12.6f %12.6f %9.4f %11.3e\n", r.size, r.padded,
                  static_cast<unsigned long long>(r.recursive_mults), static_cast<unsigned long long>(r.naive_mults),
                  r.recursive_seconds, r.naive_seconds, r.exponent, r.max_rel_error);
    out << line;
  }
  return kExitValid;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group-orbit and lattice decompositions of the matrix multiplication tensor", "orbitmm"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Construct a decomposition and write it as a file");
  g->add_option("--n", gen.n, "Matrix dimension")->required();
  g->add_option("--scheme", gen.scheme, "lattice | orbit | strassen-theta | s4-family")
      ->required()
      ->check(CLI::IsMember({"lattice", "orbit", "strassen-theta", "s4-family"}));
  auto* ts = g->add_option("--theta-sixths", gen.theta_sixths, "Angle as an integer multiple of pi/6");
  auto* tf = g->add_option("--theta", gen.theta, "Angle in radians");
  ts->excludes(tf);
  g->add_option("--variant", gen.variant, "s4-family variant: u-, u+, v-, v+");
  g->add_option("--frame", gen.frame, "lattice frame: simplex or a fixture name");
  g->add_flag("--exact", gen.exact, "Rational entries (orbit, n=3)");
  g->add_option("--output,-o", gen.output, "Output file (default: stdout)");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Check a decomposition file against the matrix multiplication tensor");
  v->add_option("file", ver.file)->required();
  v->add_option("--mode", ver.mode, "float | exact-gram | exact")
      ->check(CLI::IsMember({"float", "exact-gram", "exact"}));
  v->add_option("--tol", ver.tol, "Float tolerance on the max entrywise residual");
  v->add_flag("--json", ver.json_output, "Print one JSON record");

  AnalyzeOptions ana;
  auto* an = app.add_subcommand("analyze", "Fourier table and constraint values of an orbit seed");
  an->add_option("file", ana.file);
  an->add_option("--builtin", ana.builtin, "strassen | s4-first | s4-second | s5 | a5");

  MultiplyOptions mul;
  auto* m = app.add_subcommand("multiply", "Multiply two matrix files with a decomposition");
  m->add_option("file", mul.file)->required();
  m->add_option("--a", mul.a_file)->required();
  m->add_option("--b", mul.b_file)->required();
  m->add_option("--cutoff", mul.cutoff, "Naive multiplication at or below this block size");
  m->add_option("--output,-o", mul.output);
  m->add_flag("--force", mul.force, "Run even if the decomposition fails verification");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Recursive vs naive multiplication counts and timings");
  b->add_option("file", bench.file)->required();
  b->add_option("--sizes", bench.sizes)->delimiter(',');
  b->add_option("--cutoff", bench.cutoff);
  b->add_flag("--json", bench.json_output);
  b->add_flag("--force", bench.force);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitValid;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitValid;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (g->parsed()) return command_gen(gen, out, err);
    if (v->parsed()) return command_verify(ver, out, err);
    if (an->parsed()) return command_analyze(ana, out);
    if (m->parsed()) return command_multiply(mul, out, err);
    if (b->parsed()) return command_bench(bench, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace orbitmm
