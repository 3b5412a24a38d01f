#pragma once

// Decomposition files (JSON) and plain-text matrix files.
//
// {
//   "format_version": 1,
//   "n": 2,
//   "scheme": "lattice",
//   "scalar_kind": "float64" | "rational",
//   "params": {"key": "value", ...},
//   "terms": [
//     {"a": [...], "b": [...], "c": [...]},   one term per line, row-major n*n arrays
//     ...
//   ]
// }
//
// float64 entries are written with 17 significant digits, rational entries as "p/q"
// strings. Writing is deterministic, so write(read(write(d))) == write(d) byte for byte.

#include "orbitmm/tensor.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace orbitmm {

inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyDecomposition = std::variant<Decomposition<double>, Decomposition<Rational>>;

std::string write_decomposition(const Decomposition<double>& dec);
std::string write_decomposition(const Decomposition<Rational>& dec);
std::string write_decomposition(const AnyDecomposition& dec);

/// Throws FormatError on malformed or inconsistent documents.
AnyDecomposition read_decomposition(std::string_view text);

/// File wrappers. Unreadable or unwritable files raise std::runtime_error.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
AnyDecomposition load_decomposition(const std::string& path);

std::string write_matrix(const Matrix<double>& m);
/// "rows cols" then rows*cols whitespace-separated decimals. Throws FormatError.
Matrix<double> read_matrix(std::string_view text);

/// %.17g
std::string format_double(double x);

}  // namespace orbitmm
