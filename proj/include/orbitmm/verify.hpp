#pragma once

// Two independent validity checks for decompositions of the matrix multiplication
// tensor: entrywise float comparison, and an exact squared-norm computation that
// only touches the rational Gram matrix of the frame.

#include "orbitmm/constructions.hpp"
#include "orbitmm/frames.hpp"
#include "orbitmm/tensor.hpp"

#include <array>
#include <vector>

namespace orbitmm {

inline constexpr double kDefaultTol = 1e-9;

struct FloatReport {
  double residual = 0;  ///< max |tensor_of(dec) - MM| over all entries
  std::size_t rank = 0;
  double trace = 0;         ///< operator trace of tensor_of(dec)
  double frobenius_sq = 0;  ///< <D, D>
  double tol = kDefaultTol;
  bool valid = false;  ///< residual < tol
};

template <class T>
FloatReport verify_float(const Decomposition<T>& dec, double tol = kDefaultTol) {
  Tensor3<double> d;
  if constexpr (std::is_same_v<T, double>)
    d = tensor_of(dec);
  else
    d = tensor_of(dec.template cast<double>());
  FloatReport rep;
  rep.rank = dec.rank();
  rep.trace = operator_trace(d);
  rep.frobenius_sq = frobenius_inner(d, d);
  d -= mm_tensor<double>(dec.n());
  rep.residual = max_abs(d);
  rep.tol = tol;
  rep.valid = rep.residual < tol;
  return rep;
}

/// Pieces of <D - MM, D - MM> = <D,D> - 2<D,MM> + <MM,MM> for the lattice decomposition D.
struct ExactGramReport {
  Rational dd;        ///< <D, D>
  Rational dm;        ///< <D, MM>
  Rational mm;        ///< <MM, MM> = n^3
  Rational residual;  ///< <D - MM, D - MM>
  std::size_t rank = 0;
};

/// Evaluates the lattice decomposition of the frame purely through frame.gram:
/// factor inner products <|x><y|, |x'><y'|> = <x,x'><y,y'>, pairings with the identity
/// tr|x><y| = <y,x>, and <MM, A(x)B(x)C> = tr ABC on rank-1 factors. The result is
/// exactly zero iff the decomposition equals MM (for Grams realizable in R^n).
/// Throws std::invalid_argument for non-simplex frames.
ExactGramReport verify_exact_gram_report(const Frame& frame);

inline Rational verify_exact_gram(const Frame& frame) { return verify_exact_gram_report(frame).residual; }

/// Entrywise exact comparison for all-rational decompositions.
struct ExactReport {
  Rational max_abs_residual;
  std::size_t rank = 0;
  bool valid = false;
};
ExactReport verify_exact(const Decomposition<Rational>& dec);

template <class T>
struct InvariantsReport {
  int n = 0;
  std::size_t terms = 0;
  T trace;          ///< n for a valid decomposition
  T self_inner;     ///< <D, D>, n^3 when valid
  T inner_with_mm;  ///< <D, MM>, n^3 when valid
  std::vector<std::array<std::size_t, 3>> factor_ranks;
};

template <class T>
InvariantsReport<T> invariants_report(const Decomposition<T>& dec) {
  const Tensor3<T> d = tensor_of(dec);
  InvariantsReport<T> rep;
  rep.n = dec.n();
  rep.terms = dec.rank();
  rep.trace = operator_trace(d);
  rep.self_inner = frobenius_inner(d, d);
  rep.inner_with_mm = frobenius_inner(d, mm_tensor<T>(dec.n()));
  for (const auto& t : dec.terms()) rep.factor_ranks.push_back({matrix_rank(t.a), matrix_rank(t.b), matrix_rank(t.c)});
  return rep;
}

}  // namespace orbitmm
