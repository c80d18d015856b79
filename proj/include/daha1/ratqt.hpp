#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "daha1/bipoly.hpp"

namespace daha1 {

class ParamPoint;

// Exact element of Q(u, v) with u = q^{1/4}, v = t^{1/2}.
// Stored as u^su v^sv N / D where N, D in Z[u, v] are coprime, neither is
// divisible by u or v, and the leading coefficient of D is positive.
class RatQT {
 public:
  RatQT() : den_(BiPoly::constant(1)) {}
  RatQT(long n);  // NOLINT(google-explicit-constructor)
  explicit RatQT(const mpq_class& r, int su = 0, int sv = 0);
  static RatQT u_pow(int n) { return RatQT(mpq_class(1), n, 0); }
  static RatQT v_pow(int n) { return RatQT(mpq_class(1), 0, n); }
  static RatQT make(BiPoly num, BiPoly den, int su = 0, int sv = 0);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return su_ == 0 && sv_ == 0 && num_.is_one() && den_.is_one(); }
  // True when the value is c u^a v^b with c rational.
  bool is_monomial() const { return num_.is_constant() && den_.is_constant(); }
  bool has_u() const;

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  int u_shift() const { return su_; }
  int v_shift() const { return sv_; }

  RatQT operator+(const RatQT& o) const;
  RatQT operator-(const RatQT& o) const;
  RatQT operator*(const RatQT& o) const;
  RatQT operator/(const RatQT& o) const;
  RatQT operator-() const;
  RatQT& operator+=(const RatQT& o) { return *this = *this + o; }
  RatQT& operator-=(const RatQT& o) { return *this = *this - o; }
  RatQT& operator*=(const RatQT& o) { return *this = *this * o; }
  RatQT& operator/=(const RatQT& o) { return *this = *this / o; }
  RatQT inv() const;
  RatQT pow(int n) const;
  bool operator==(const RatQT& o) const;
  bool operator!=(const RatQT& o) const { return !(*this == o); }

  // v -> 1/v, i.e. t -> 1/t.
  RatQT invert_v() const;

  std::complex<double> eval(std::complex<double> u, std::complex<double> v) const;
  std::string to_string() const;

 private:
  int su_ = 0;
  int sv_ = 0;
  BiPoly num_;
  BiPoly den_;
};

// Value at a parameter point; throws DenominatorVanishes.
std::complex<double> rat_eval(const RatQT& r, const ParamPoint& pt);
// Limit u -> 0 with v fixed; throws PoleAtQZero.
RatQT rat_q0_limit(const RatQT& r);

}  // namespace daha1
