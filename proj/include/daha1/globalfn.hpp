#pragma once

#include <vector>

#include "daha1/qpairing.hpp"
#include "daha1/report.hpp"

namespace daha1 {

struct SeriesValue {
  cplx value;
  int terms = 0;
  double tail = 0.0;  // magnitude of the last included term
};

// Truncated reproducing kernel
//   sum_n q^{n^2/4} t^{n/2} P_n(X) P_n(L) (mu)_CT / (P_n P_n mu)_CT
// with numeric P_n at the parameter point. Polynomials and norms are built
// once and reused across evaluations.
class GlobalFunction {
 public:
  explicit GlobalFunction(const ParamPoint& pt, int max_terms = 60);

  SeriesValue phi_tilde(cplx X, cplx L) const;
  cplx p(int n, cplx X) const;  // P_n(X), monic
  // (P_n P_n mu)_CT / (mu)_CT
  cplx norm(int n) const { return norms_.at(n); }
  const ParamPoint& point() const { return pt_; }

 private:
  ParamPoint pt_;
  std::vector<NumLaurent> polys_;
  std::vector<cplx> norms_;
};

cplx sigma(cplx L, const ParamPoint& pt);
// sum_j (q/t)^j X^{2j} prod_{s=1}^j (1 - t q^{s-1})(1 - q^{s-1} t L^{-2}) / ((1 - q^s)(1 - q^s L^{-2}))
cplx heine_sum(cplx X, cplx L, const ParamPoint& pt);
// Two-term asymptotic expansion of phi_tilde, valid for |X| < |t|^{1/2} |q|^{-1/2}.
cplx hc_expansion(cplx X, cplx L, const ParamPoint& pt);

// Reports: X <-> L symmetry and X -> X^{-1} invariance.
std::vector<CheckReport> check_phi_symmetry(const GlobalFunction& gf, cplx X, cplx L, double tol = 1e-9);
CheckReport check_hc(const GlobalFunction& gf, cplx X, cplx L, double tol = 1e-6);
// phi_tilde(X_i, t^{1/2} q^{n/2}) / (theta(X_i) P_n(X_i)) is the same for every sample.
CheckReport recovery_check(const GlobalFunction& gf, int n, const std::vector<cplx>& xs, double tol = 1e-7);

}  // namespace daha1
