#include "orbitmm/verify.hpp"

#include <stdexcept>

namespace orbitmm {

namespace {

class GramInner {
 public:
  explicit GramInner(const Matrix<Rational>& gram) : gram_(gram) {}

  /// <x, y> for frame combinations x, y.
  void operator()(Rational& out, const FrameCombination& x, const FrameCombination& y) {
    out = 0;
    for (const auto& [i, a] : x.coeffs)
      for (const auto& [j, b] : y.coeffs) {
        tmp_ = a * b;
        tmp_ *= gram_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        out += tmp_;
      }
  }

 private:
  const Matrix<Rational>& gram_;
  Rational tmp_;
};

}  // namespace

ExactGramReport verify_exact_gram_report(const Frame& frame) {
  if (!frame.is_simplex()) throw std::invalid_argument("verify_exact_gram requires a simplex frame");
  const int n = frame.n;
  const auto terms = lattice_symbolic_terms(n);
  GramInner inner(frame.gram);

  ExactGramReport rep;
  rep.rank = terms.size() + 1;
  const Rational dim(n);
  rep.mm = dim * dim * dim;

  Rational x, y, prod;

  // <1(x)1(x)1, 1(x)1(x)1> = n^3, and the identity pairs with each term through traces.
  Rational with_identity(0);
  for (const auto& t : terms) {
    prod = 1;
    for (const auto& f : t.slots) {
      inner(x, f.bra, f.ket);
      prod *= x;
    }
    with_identity += prod;
  }
  Rational pairs(0);
  for (const auto& t : terms)
    for (const auto& s : terms) {
      prod = 1;
      for (std::size_t k = 0; k < 3; ++k) {
        inner(x, t.slots[k].ket, s.slots[k].ket);
        inner(y, t.slots[k].bra, s.slots[k].bra);
        prod *= x;
        prod *= y;
      }
      pairs += prod;
    }
  rep.dd = rep.mm + 2 * with_identity + pairs;

  // <MM, 1(x)1(x)1> = tr 1 = n; <MM, |x1><y1| (x) |x2><y2| (x) |x3><y3|> = <y1,x2><y2,x3><y3,x1>.
  rep.dm = dim;
  for (const auto& t : terms) {
    prod = 1;
    for (std::size_t k = 0; k < 3; ++k) {
      inner(x, t.slots[k].bra, t.slots[(k + 1) % 3].ket);
      prod *= x;
    }
    rep.dm += prod;
  }
  rep.residual = rep.dd - 2 * rep.dm + rep.mm;
  return rep;
}

ExactReport verify_exact(const Decomposition<Rational>& dec) {
  Tensor3<Rational> d = tensor_of(dec);
  d -= mm_tensor<Rational>(dec.n());
  ExactReport rep;
  rep.rank = dec.rank();
  rep.max_abs_residual = 0;
  for (const auto& e : d.data())
    if (abs(e) > rep.max_abs_residual) rep.max_abs_residual = abs(e);
  rep.valid = is_zero(rep.max_abs_residual);
  return rep;
}

}  // namespace orbitmm
