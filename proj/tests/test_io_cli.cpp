#include "doctest.h"
#include "orbitmm/cli.hpp"
#include "orbitmm/constructions.hpp"
#include "orbitmm/io.hpp"
#include "test_util.hpp"

#include <filesystem>
#include <numbers>
#include <sstream>

using namespace orbitmm;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "orbitmm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "orbitmm_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("decomposition round trip") {
  const auto fl = lattice_decomposition(simplex_frame(3));
  const std::string text = write_decomposition(fl);
  const auto back = read_decomposition(text);
  REQUIRE(std::holds_alternative<Decomposition<double>>(back));
  CHECK(write_decomposition(back) == text);
  CHECK(max_abs(tensor_of(std::get<Decomposition<double>>(back)) - tensor_of(fl)) == 0.0);

  const auto ex = orbit_decomposition_exact(fixture_frame("tetrahedron-3"), GroupTag::S4,
                                            cycle_permutation(4, {0, 1, 2}), s4_first_family_matrix());
  const std::string etext = write_decomposition(ex);
  const auto eback = read_decomposition(etext);
  REQUIRE(std::holds_alternative<Decomposition<Rational>>(eback));
  CHECK(write_decomposition(eback) == etext);
  CHECK(tensor_of(std::get<Decomposition<Rational>>(eback)) == mm_tensor<Rational>(3));

  const std::string path = tmp("round.json");
  write_file(path, etext);
  CHECK(read_file(path) == etext);
  CHECK(std::holds_alternative<Decomposition<Rational>>(load_decomposition(path)));
  CHECK_THROWS_AS(read_file(tmp("missing.json")), std::runtime_error);
}

TEST_CASE("malformed files") {
  const std::string text = write_decomposition(strassen_theta(UnitAngle::sixths(0)));
  CHECK_THROWS_AS(read_decomposition(text.substr(0, text.size() / 2)), FormatError);
  CHECK_THROWS_AS(read_decomposition(""), FormatError);
  CHECK_THROWS_AS(read_decomposition("[]"), FormatError);
  std::string wrong = text;
  wrong.replace(wrong.find("\"format_version\": 1"), 19, "\"format_version\": 9");
  CHECK_THROWS_AS(read_decomposition(wrong), FormatError);
  std::string short_term = text;
  short_term.replace(short_term.find("[1, 0, 0, 1]"), 12, "[1, 0, 0]");
  CHECK_THROWS_AS(read_decomposition(short_term), FormatError);
}

TEST_CASE("matrix files") {
  const Matrix<double> m{{1, 2.5}, {-3, 0.1}};
  const auto back = read_matrix(write_matrix(m));
  CHECK(back == m);
  CHECK(read_matrix("2 3\n1 2 3\n4 5 6\n").cols() == 3);
  CHECK_THROWS_AS(read_matrix("2 2\n1 2 3\n"), FormatError);
  CHECK_THROWS_AS(read_matrix("2 2\n1 2 3 4 5\n"), FormatError);
  CHECK_THROWS_AS(read_matrix("x"), FormatError);
}

TEST_CASE("cli gen and verify") {
  const std::string lat = tmp("lat4.json");
  auto g = cli({"gen", "--n", "4", "--scheme", "lattice", "-o", lat});
  CHECK(g.code == 0);
  const auto d = std::get<Decomposition<double>>(load_decomposition(lat));
  CHECK(d.rank() == 61);
  CHECK(cli({"verify", lat}).code == 0);

  const auto st = cli({"gen", "--n", "2", "--scheme", "strassen-theta", "--theta-sixths", "0"});
  CHECK(st.code == 0);
  CHECK(std::get<Decomposition<double>>(read_decomposition(st.out)).rank() == 7);

  CHECK(cli({"gen", "--n", "2", "--scheme", "s4-family"}).code == 2);
  CHECK(cli({"gen", "--n", "2", "--scheme", "strassen-theta", "--theta-sixths", "0", "--theta", "0.1"}).code == 2);
  CHECK(cli({"gen", "--n", "2", "--scheme", "nope"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);

  const std::string lat5 = tmp("lat5.json");
  CHECK(cli({"gen", "--n", "5", "--scheme", "lattice", "-o", lat5}).code == 0);
  const auto eg = cli({"verify", lat5, "--mode", "exact-gram"});
  CHECK(eg.code == 0);
  CHECK(contains(eg.out, "0 (exact)"));
  CHECK(contains(eg.out, "VALID"));

  const std::string off = tmp("off.json");
  write_file(off, write_decomposition(strassen_theta(std::numbers::pi / 12)));
  const auto bad = cli({"verify", off});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "INVALID"));
  CHECK(cli({"verify", off, "--json"}).code == 1);

  const std::string trunc = tmp("trunc.json");
  const std::string text = read_file(lat);
  write_file(trunc, text.substr(0, text.size() / 3));
  CHECK(cli({"verify", trunc}).code == 2);
  CHECK(cli({"verify", tmp("missing.json")}).code == 2);

  const std::string ex = tmp("ex3.json");
  CHECK(cli({"gen", "--n", "3", "--scheme", "orbit", "--exact", "-o", ex}).code == 0);
  const auto exv = cli({"verify", ex, "--mode", "exact"});
  CHECK(exv.code == 0);
  CHECK(contains(exv.out, "0 (exact)"));
}

TEST_CASE("cli analyze") {
  for (const char* b : {"strassen", "s4-first", "s4-second", "s5", "a5"}) {
    CAPTURE(b);
    CHECK(cli({"analyze", "--builtin", b}).code == 0);
  }
  CHECK(cli({"analyze", "--builtin", "cube"}).code == 2);
}

TEST_CASE("cli multiply and bench") {
  const std::string s = tmp("strassen.json");
  CHECK(cli({"gen", "--n", "2", "--scheme", "strassen-theta", "--theta-sixths", "0", "-o", s}).code == 0);
  const std::string a = tmp("a.txt"), b = tmp("b.txt");
  write_file(a, write_matrix(Matrix<double>{{1, 2}, {3, 4}}));
  write_file(b, write_matrix(Matrix<double>{{5, 6}, {7, 8}}));
  const auto m = cli({"multiply", s, "--a", a, "--b", b});
  CHECK(m.code == 0);
  CHECK(max_abs_diff(read_matrix(m.out), Matrix<double>{{19, 22}, {43, 50}}) < 1e-9);
  CHECK(contains(m.err, "7"));

  const std::string off = tmp("off_mul.json");
  write_file(off, write_decomposition(strassen_theta(std::numbers::pi / 12)));
  CHECK(cli({"multiply", off, "--a", a, "--b", b}).code == 1);
  CHECK(cli({"multiply", off, "--a", a, "--b", b, "--force"}).code == 0);

  const std::string c = tmp("c.txt");
  write_file(c, write_matrix(Matrix<double>(3, 3)));
  CHECK(cli({"multiply", s, "--a", a, "--b", c}).code == 2);

  const auto bench = cli({"bench", s, "--sizes", "4,8", "--json"});
  CHECK(bench.code == 0);
  CHECK(contains(bench.out, "\"recursive_mults\":49"));
  CHECK(contains(bench.out, "\"recursive_mults\":343"));
  CHECK(contains(bench.out, "\"naive_mults\":512"));
  CHECK(cli({"bench", off, "--sizes", "4"}).code == 1);
}
