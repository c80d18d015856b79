#pragma once

#include <complex>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "daha1/errors.hpp"
#include "daha1/params.hpp"
#include "daha1/ratqt.hpp"

namespace daha1 {

inline bool coeff_is_zero(const RatQT& c) { return c.is_zero(); }
inline bool coeff_is_zero(const cplx& c) { return c == cplx(0.0); }

// Finite Laurent polynomial in X; no zero coefficients are stored.
template <class C>
class Laurent {
 public:
  using Coeff = C;

  Laurent() = default;
  static Laurent monomial(int n, const C& c = C(1)) {
    Laurent f;
    f.add_term(n, c);
    return f;
  }
  static Laurent constant(const C& c) { return monomial(0, c); }

  const std::map<int, C>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int min_deg() const { return c_.begin()->first; }
  int max_deg() const { return c_.rbegin()->first; }
  C coeff(int n) const {
    auto it = c_.find(n);
    return it == c_.end() ? C(0) : it->second;
  }
  C constant_term() const { return coeff(0); }
  bool is_even() const {
    for (const auto& [n, c] : c_)
      if (n % 2) return false;
    return true;
  }

  void add_term(int n, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = c_.try_emplace(n, c);
    if (!fresh) {
      it->second += c;
      if (coeff_is_zero(it->second)) c_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [n, c] : o.c_) add_term(n, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [n, c] : o.c_) add_term(n, -c);
    return *this;
  }
  Laurent operator+(const Laurent& o) const { return Laurent(*this) += o; }
  Laurent operator-(const Laurent& o) const { return Laurent(*this) -= o; }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [n, c] : c_) r.c_.emplace(n, -c);
    return r;
  }
  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [n, a] : c_)
      for (const auto& [m, b] : o.c_) r.add_term(n + m, a * b);
    return r;
  }
  Laurent scaled(const C& s) const {
    Laurent r;
    if (coeff_is_zero(s)) return r;
    for (const auto& [n, c] : c_) r.add_term(n, c * s);
    return r;
  }
  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [n, c] : c_) r.c_.emplace(n + k, c);
    return r;
  }
  // X -> X^{-1}
  Laurent reflected() const {
    Laurent r;
    for (const auto& [n, c] : c_) r.c_.emplace(-n, c);
    return r;
  }
  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  template <class Fn>
  auto map_coeffs(Fn fn) const {
    using D = decltype(fn(std::declval<const C&>()));
    Laurent<D> r;
    for (const auto& [n, c] : c_) r.add_term(n, fn(c));
    return r;
  }

 private:
  std::map<int, C> c_;
};

using LaurentPoly = Laurent<RatQT>;
using NumLaurent = Laurent<cplx>;

// Exact quotient by X^2 - 1; throws NonDivisible.
template <class C>
Laurent<C> divide_by_x2_minus_1(const Laurent<C>& h) {
  Laurent<C> g;
  if (h.is_zero()) return g;
  int lo = h.min_deg(), hi = h.max_deg();
  // (X^2 - 1) g = h  gives  g_{n-2} = h_n + g_n, solved from the top.
  std::map<int, C> gc;
  auto at = [&](int n) { auto it = gc.find(n); return it == gc.end() ? C(0) : it->second; };
  for (int n = hi; n >= lo + 2; --n) {
    C val = h.coeff(n) + at(n);
    if (!coeff_is_zero(val)) gc[n - 2] = val;
  }
  for (int n = lo; n <= std::min(lo + 1, hi); ++n) {
    C rem = h.coeff(n) + at(n);
    bool zero;
    if constexpr (std::is_same_v<C, cplx>) {
      // floating remainders are rounding residue unless comparable to the input
      double scale = 0.0;
      for (const auto& [m, c] : h.terms()) scale = std::max(scale, std::abs(c));
      zero = std::abs(rem) <= 1e-9 * scale;
    } else {
      zero = coeff_is_zero(rem);
    }
    if (!zero) throw NonDivisible("Laurent polynomial is not a multiple of X^2 - 1");
  }
  for (const auto& [n, c] : gc) g.add_term(n, c);
  return g;
}

// Value at a numeric X.
inline cplx eval_at(const NumLaurent& f, cplx X) {
  cplx s = 0.0;
  for (const auto& [n, c] : f.terms()) s += c * std::pow(X, n);
  return s;
}

inline NumLaurent to_numeric(const LaurentPoly& f, const ParamPoint& pt) {
  return f.map_coeffs([&](const RatQT& c) { return rat_eval(c, pt); });
}

std::string to_string(const LaurentPoly& f);

}  // namespace daha1
