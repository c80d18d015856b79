#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

namespace daha1 {

using cplx = std::complex<double>;

// Numeric parameters on the canonical branch q = exp(-1/a), t = q^k,
// q^z := exp(-z/a).
class ParamPoint {
 public:
  static ParamPoint from_q(double q, cplx k);
  static ParamPoint from_a(double a, cplx k);

  double a() const { return a_; }
  double q() const { return q_; }
  cplx k() const { return k_; }
  cplx t() const { return qpow(k_); }
  double u() const { return std::exp(-0.25 / a_); }
  cplx v() const { return qpow(0.5 * k_); }
  cplx qpow(cplx z) const { return std::exp(-z / a_); }
  double qpow(double z) const { return std::exp(-z / a_); }
  double period() const;  // length 2 pi a of the imaginary period

  ParamPoint with_k(cplx k) const;
  std::string describe() const;

  double tail_tol = 1e-16;
  double quad_tol = 1e-12;
  std::size_t max_nodes = std::size_t{1} << 20;

 private:
  ParamPoint(double a, cplx k);
  double a_;
  double q_;
  cplx k_;
};

}  // namespace daha1
