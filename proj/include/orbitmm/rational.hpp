#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace orbitmm {

/// Exact fraction in lowest terms. GMP canonicalizes after every arithmetic
/// operation, so values never carry common factors between operations.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Always "p/q", with q = 1 spelled out.
std::string to_fraction_string(const Rational& r);

// Scalar-kind helpers shared by the templated linear algebra.

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return abs(x); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

template <class T>
T from_double(double x);

template <>
inline double from_double<double>(double x) {
  return x;
}

/// Exact binary value of x; only for tests and conversions that accept it.
template <>
inline Rational from_double<Rational>(double x) {
  return Rational(x);
}

}  // namespace orbitmm
