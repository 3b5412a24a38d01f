#pragma once

// Order-3 tensors over n x n matrix slots, separable terms, and decompositions.
//
// Index convention (the only place it is defined):
//
//   Tensor3 entry (a, b, c, d, e, f), each index in 0..n-1, is stored at
//   ((((a*n + b)*n + c)*n + d)*n + e)*n + f.
//
//   The matrix multiplication tensor is MM(a,b,c,d,e,f) = [a == e][b == f][c == d].
//
//   A separable term x (x) y (x) z contributes x[d,a] * y[e,b] * z[f,c]: the first
//   three indices are column indices of the three slots and the last three are
//   row indices. With this pairing <MM, A (x) B (x) C> = tr(ABC), and the operator
//   trace sum_{abc} T(a,b,c,a,b,c) is tr(x) tr(y) tr(z).

#include "orbitmm/matrix.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitmm {

template <class T>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("tensor dimension must be >= 1");
    std::size_t s = static_cast<std::size_t>(n);
    data_.assign(s * s * s * s * s * s, T(0));
  }

  int n() const { return n_; }
  std::size_t size() const { return data_.size(); }

  std::size_t index(int a, int b, int c, int d, int e, int f) const {
    std::size_t n = static_cast<std::size_t>(n_);
    return ((((static_cast<std::size_t>(a) * n + b) * n + c) * n + d) * n + e) * n + f;
  }
  T& operator()(int a, int b, int c, int d, int e, int f) { return data_[index(a, b, c, d, e, f)]; }
  const T& operator()(int a, int b, int c, int d, int e, int f) const {
    return data_[index(a, b, c, d, e, f)];
  }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  Tensor3& operator+=(const Tensor3& o) {
    require_same_n(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    require_same_n(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  std::size_t count_nonzero() const {
    std::size_t c = 0;
    for (const auto& x : data_)
      if (!is_zero(x)) ++c;
    return c;
  }

  template <class U>
  Tensor3<U> cast() const {
    Tensor3<U> out(n_);
    auto od = out.data();
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if constexpr (std::is_same_v<U, double>)
        od[k] = to_double(data_[k]);
      else
        od[k] = U(data_[k]);
    }
    return out;
  }

 private:
  void require_same_n(const Tensor3& o) const {
    if (n_ != o.n_) throw std::invalid_argument("tensor dimension mismatch");
  }

  int n_ = 0;
  std::vector<T> data_;
};

inline double max_abs(const Tensor3<double>& t) {
  double r = 0;
  for (double x : t.data()) r = std::max(r, std::fabs(x));
  return r;
}

template <class T>
struct Rank1Term {
  Matrix<T> a, b, c;

  int n() const { return static_cast<int>(a.rows()); }
  bool well_formed() const {
    const auto n = a.rows();
    return a.square() && b.rows() == n && b.square() && c.rows() == n && c.square();
  }
};

enum class Scheme { lattice, orbit, strassen_theta, s4_family, fixture, imported };

std::string to_string(Scheme s);
/// Throws std::invalid_argument for unknown names.
Scheme parse_scheme(const std::string& name);

/// Ordered list of separable terms plus metadata. Homogeneous in scalar kind.
template <class T>
class Decomposition {
 public:
  Decomposition() = default;
  Decomposition(int n, Scheme scheme) : n_(n), scheme_(scheme) {
    if (n < 1) throw std::invalid_argument("decomposition dimension must be >= 1");
  }

  int n() const { return n_; }
  Scheme scheme() const { return scheme_; }
  std::size_t rank() const { return terms_.size(); }
  const std::vector<Rank1Term<T>>& terms() const { return terms_; }
  const std::map<std::string, std::string>& params() const { return params_; }

  void add(Rank1Term<T> term) {
    if (!term.well_formed() || term.n() != n_)
      throw std::invalid_argument("term dimension does not match decomposition n=" + std::to_string(n_));
    terms_.push_back(std::move(term));
  }
  void erase(std::size_t index) { terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(index)); }
  void set_param(const std::string& key, std::string value) { params_[key] = std::move(value); }
  std::string param(const std::string& key, const std::string& fallback = "") const {
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

  template <class U>
  Decomposition<U> cast() const {
    Decomposition<U> out(n_, scheme_);
    for (const auto& [k, v] : params_) out.set_param(k, v);
    for (const auto& t : terms_) out.add({t.a.template cast<U>(), t.b.template cast<U>(), t.c.template cast<U>()});
    return out;
  }

 private:
  int n_ = 1;
  Scheme scheme_ = Scheme::imported;
  std::vector<Rank1Term<T>> terms_;
  std::map<std::string, std::string> params_;
};

template <class T>
Tensor3<T> mm_tensor(int n) {
  Tensor3<T> t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t(a, b, c, /*d=*/c, /*e=*/a, /*f=*/b) = T(1);
  return t;
}

/// tr(ABC), which equals <MM, A (x) B (x) C>.
template <class T>
T triple_trace(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
  if (!a.square() || a.rows() != b.rows() || b.rows() != c.rows() || !b.square() || !c.square())
    throw std::invalid_argument("triple_trace: dimension mismatch");
  return trace(a * b * c);
}

template <class T>
void accumulate_term(Tensor3<T>& out, const Rank1Term<T>& term) {
  const int n = out.n();
  if (term.n() != n) throw std::invalid_argument("term dimension mismatch");
  auto data = out.data();
  std::size_t k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const T& x = term.a(d, a);
          if (is_zero(x)) {
            k += static_cast<std::size_t>(n) * n;
            continue;
          }
          for (int e = 0; e < n; ++e) {
            T xy = x * term.b(e, b);
            if (is_zero(xy)) {
              k += static_cast<std::size_t>(n);
              continue;
            }
            for (int f = 0; f < n; ++f, ++k) data[k] += xy * term.c(f, c);
          }
        }
}

/// Dense sum of the decomposition's terms, accumulated in term order.
template <class T>
Tensor3<T> tensor_of(const Decomposition<T>& dec) {
  Tensor3<T> t(dec.n());
  for (const auto& term : dec.terms()) accumulate_term(t, term);
  return t;
}

template <class T>
Tensor3<T> tensor_of(const Rank1Term<T>& term) {
  Tensor3<T> t(term.n());
  accumulate_term(t, term);
  return t;
}

template <class T>
T frobenius_inner(const Tensor3<T>& x, const Tensor3<T>& y) {
  if (x.n() != y.n()) throw std::invalid_argument("frobenius_inner: dimension mismatch");
  T s(0);
  auto xd = x.data();
  auto yd = y.data();
  for (std::size_t k = 0; k < xd.size(); ++k) s += xd[k] * yd[k];
  return s;
}

template <class T>
T operator_trace(const Tensor3<T>& t) {
  T s(0);
  const int n = t.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) s += t(a, b, c, a, b, c);
  return s;
}

template <class T>
Rank1Term<T> identity_term(int n) {
  auto one = Matrix<T>::identity(static_cast<std::size_t>(n));
  return {one, one, one};
}

}  // namespace orbitmm
