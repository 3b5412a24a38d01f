#include "orbitmm/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace orbitmm {

namespace {

using json = nlohmann::json;

std::string entry(double x) {
  if (!std::isfinite(x)) throw FormatError("cannot serialize non-finite entry");
  return format_double(x);
}

std::string entry(const Rational& x) { return "\"" + to_fraction_string(x) + "\""; }

template <class T>
void write_array(std::string& out, const Matrix<T>& m) {
  out += '[';
  bool first = true;
  for (const auto& x : m.data()) {
    if (!first) out += ", ";
    first = false;
    out += entry(x);
  }
  out += ']';
}

template <class T>
std::string write_impl(const Decomposition<T>& dec, const char* kind) {
  std::string out = "{\n";
  out += "  \"format_version\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"n\": " + std::to_string(dec.n()) + ",\n";
  out += "  \"scheme\": " + json(to_string(dec.scheme())).dump() + ",\n";
  out += "  \"scalar_kind\": \"" + std::string(kind) + "\",\n";
  out += "  \"params\": {";
  bool first = true;
  for (const auto& [k, v] : dec.params()) {
    if (!first) out += ", ";
    first = false;
    out += json(k).dump() + ": " + json(v).dump();
  }
  out += "},\n";
  out += "  \"terms\": [";
  for (std::size_t i = 0; i < dec.terms().size(); ++i) {
    const auto& t = dec.terms()[i];
    out += i ? ",\n    " : "\n    ";
    out += "{\"a\": ";
    write_array(out, t.a);
    out += ", \"b\": ";
    write_array(out, t.b);
    out += ", \"c\": ";
    write_array(out, t.c);
    out += '}';
  }
  out += dec.terms().empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

double read_entry(const json& v, double*) {
  if (!v.is_number()) throw FormatError("float64 entry is not a number");
  return v.get<double>();
}

Rational read_entry(const json& v, Rational*) {
  if (!v.is_string()) throw FormatError("rational entry is not a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

template <class T>
Matrix<T> read_factor(const json& term, const char* key, std::size_t n) {
  auto it = term.find(key);
  if (it == term.end() || !it->is_array()) throw FormatError(std::string("term is missing array \"") + key + "\"");
  if (it->size() != n * n)
    throw FormatError(std::string("factor \"") + key + "\" has " + std::to_string(it->size()) + " entries, expected " +
                      std::to_string(n * n));
  std::vector<T> data;
  data.reserve(n * n);
  for (const auto& v : *it) data.push_back(read_entry(v, static_cast<T*>(nullptr)));
  return Matrix<T>(n, n, std::move(data));
}

template <class T>
Decomposition<T> read_impl(const json& doc, int n, Scheme scheme) {
  Decomposition<T> dec(n, scheme);
  const auto s = static_cast<std::size_t>(n);
  for (auto it = doc.at("params").begin(); it != doc.at("params").end(); ++it) {
    const std::string k = it.key();
    const json& v = it.value();
    if (!v.is_string()) throw FormatError("param \"" + k + "\" is not a string");
    dec.set_param(k, v.template get<std::string>());
  }
  for (const auto& term : doc.at("terms")) {
    if (!term.is_object()) throw FormatError("term is not an object");
    dec.add({read_factor<T>(term, "a", s), read_factor<T>(term, "b", s), read_factor<T>(term, "c", s)});
  }
  return dec;
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string write_decomposition(const Decomposition<double>& dec) { return write_impl(dec, "float64"); }
std::string write_decomposition(const Decomposition<Rational>& dec) { return write_impl(dec, "rational"); }
std::string write_decomposition(const AnyDecomposition& dec) {
  return std::visit([](const auto& d) { return write_decomposition(d); }, dec);
}

AnyDecomposition read_decomposition(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not a valid decomposition document: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("decomposition document must be an object");
  const json& version = require(doc, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    throw FormatError("unsupported format_version");
  const json& nj = require(doc, "n");
  if (!nj.is_number_integer() || nj.get<long>() < 1 || nj.get<long>() > 64) throw FormatError("n must be an integer >= 1");
  const json& sj = require(doc, "scheme");
  const json& kj = require(doc, "scalar_kind");
  if (!sj.is_string() || !kj.is_string()) throw FormatError("scheme and scalar_kind must be strings");
  if (!require(doc, "params").is_object()) throw FormatError("params must be an object");
  if (!require(doc, "terms").is_array()) throw FormatError("terms must be an array");

  Scheme scheme;
  try {
    scheme = parse_scheme(sj.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const int n = nj.get<int>();
  const std::string kind = kj.get<std::string>();
  if (kind == "float64") return read_impl<double>(doc, n, scheme);
  if (kind == "rational") return read_impl<Rational>(doc, n, scheme);
  throw FormatError("unknown scalar_kind \"" + kind + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

AnyDecomposition load_decomposition(const std::string& path) { return read_decomposition(read_file(path)); }

std::string write_matrix(const Matrix<double>& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

Matrix<double> read_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw FormatError("matrix file must start with \"rows cols\"");
  Matrix<double> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (auto& x : m.data())
    if (!(in >> x)) throw FormatError("matrix file has fewer than rows*cols entries");
  std::string extra;
  if (in >> extra) throw FormatError("matrix file has trailing data");
  return m;
}

}  // namespace orbitmm
