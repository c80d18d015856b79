#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "daha1/report.hpp"

namespace daha1 {

// Polynomial in k over Q, dense, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) : QPoly(mpq_class(c)) {}
  QPoly(const mpq_class& c);
  static QPoly k() { return from({mpq_class(0), mpq_class(1)}); }
  static QPoly from(std::vector<mpq_class> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpq_class coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : mpq_class(0); }
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  double eval(double k) const;
  mpq_class eval(const mpq_class& k) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Polynomials in x with QPoly coefficients: the polynomial representation.
using XPoly = std::map<int, QPoly>;

// D = d/dx + (k/x)(1 - s); y acts as D/2.
XPoly dunkl_apply(const XPoly& f);

// Normal-ordered words v^a s^delta u^b with u = y + x, v = x - y, so that
// uv = vu + 1 + 2ks and s anticommutes with u and v.
class RationalWord {
 public:
  using Key = std::tuple<int, int, int>;  // (a, delta, b)
  RationalWord() = default;
  static RationalWord one() { return term(0, 0, 0); }
  static RationalWord term(int a, int delta, int b, const QPoly& c = QPoly(1));
  static RationalWord x();  // (u + v)/2
  static RationalWord y();  // (u - v)/2
  static RationalWord s() { return term(0, 1, 0); }

  const std::map<Key, QPoly>& terms() const { return c_; }
  void add_term(const Key& key, const QPoly& c);
  RationalWord operator+(const RationalWord& o) const;
  RationalWord operator*(const RationalWord& o) const;
  RationalWord scaled(const QPoly& c) const;
  RationalWord pow(int n) const;
  bool operator==(const RationalWord& o) const { return c_ == o.c_; }

  // Left multiplication by one generator of the normal form.
  RationalWord left_u() const;
  RationalWord left_v() const;
  RationalWord left_s() const;

 private:
  std::map<Key, QPoly> c_;
};

// Anti-involution fixing x and s, sending y to -y (u <-> v).
RationalWord kappa(const RationalWord& w);
// Sum of the coefficients at (0, delta, 0), s acting by 1.
QPoly coinvariant(const RationalWord& w);

// {x^a, x^b} = coinvariant(x^{a+b}), computed both ways; throws
// std::logic_error if the closed product and the normal form disagree.
QPoly rational_form(int a, int b);
QPoly rational_form_closed(int a, int b);

// Integral over the real line of f(iy) g(iy) e^{-2y^2} |y|^{2k} for
// f = x^a, g = x^b.
cplx rational_integral(int a, int b, double k);

// Fits value = C * sigma^p * {x^a, x^b} (p = (a+b)/2) with C from the (0, 0)
// anchor and sigma from (1, 1), then predicts (a, b) to tol relative. Throws
// CalibrationFailure if C is not real positive or sigma is not +-1.
CheckReport check_rational_integral(int a, int b, double k, double tol = 1e-8);
// Closed product against the coinvariant of x^{a+b}, exactly.
CheckReport check_rational_coinvariant(int a, int b);

}  // namespace daha1
