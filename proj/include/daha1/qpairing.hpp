#pragma once

#include <vector>

#include "daha1/laurent.hpp"
#include "daha1/quadrature.hpp"

namespace daha1 {

// ---- exact tier

// mu / (mu)_CT = sum_{m>=0} c_m (X^{2m} + q^m X^{-2m}), the m = 0 term once.
struct MuSeries {
  std::vector<RatQT> c;  // c[0] = 1
  int order() const { return static_cast<int>(c.size()) - 1; }
  // Coefficient of X^n in the expansion.
  RatQT coeff(int n) const;
};

// Exact coefficients up to the given order, memoized.
MuSeries muo_series(int order);

// (mu)_CT as a power series in q, coefficients polynomial in t; entries
// 0..order.
std::vector<RatQT> mu_ct_series(int order);

// An exact multiple of the transcendental constant (mu)_CT.
struct CtValue {
  RatQT reduced;
  cplx numeric(const ParamPoint& pt) const;
};

// (F mu)_CT as (mu)_CT (F mu°)_CT.
CtValue ct_of(const LaurentPoly& F);
// <f, g> = (f T(g) mu)_CT
CtValue ct_pair(const LaurentPoly& f, const LaurentPoly& g);

// ---- numeric tier

// Distance from x to the nearest pole of mu.
double mu_pole_distance(cplx x, const ParamPoint& pt);
// Throws PoleProximity within 1e-6 periods of a pole.
cplx mu_numeric(cplx x, const ParamPoint& pt);
cplx mu_ct(const ParamPoint& pt);

// F(x) for F a Laurent polynomial in X = q^x.
cplx eval_at_x(const NumLaurent& F, cplx x, const ParamPoint& pt);

cplx theta(cplx X, const ParamPoint& pt);

struct PairingContext {
  ParamPoint pt;
  double epsilon = 0.0;
  bool gaussian = false;
  double M = 1.0;  // period multiple, a positive half-integer
  Exec exec = Exec::parallel;
};

// Mean of F mu over eps + [-pi a M i, pi a M i], or with gaussian set,
// sqrt(pi a) times the mean of F theta(X) mu over one period.
cplx contour_integral(const NumLaurent& F, const PairingContext& ctx, QuadResult* info = nullptr);
cplx contour_pair(const LaurentPoly& f, const LaurentPoly& g, const PairingContext& ctx);

// f T(g) with coefficients evaluated at pt.
NumLaurent pairing_integrand(const LaurentPoly& f, const LaurentPoly& g, const ParamPoint& pt);

// ---- special factors

// Points -k/2 (j = 0) and sign (k+j)/2 for j >= 1.
struct ResidualPoint {
  int j = 0;
  int sign = -1;
  cplx value(const ParamPoint& pt) const { return j == 0 ? -0.5 * pt.k() : 0.5 * sign * (pt.k() + double(j)); }
};

// G(k) = sqrt(pi a) prod_{j>=1} (1 - q^{k+j})/(1 - q^{2k+j})
cplx gauss_normalizer(const ParamPoint& pt);
// 1/G(k), finite where G has poles.
cplx inverse_gauss_normalizer(const ParamPoint& pt);
// A(k~) = sqrt(pi a) sum_m q^{m^2 + 2 m k~}
cplx theta_contribution(cplx kt, const ParamPoint& pt);
// Limit of (vanishing denominator factor) * mu at the residual point,
// computed as the product with that factor left out.
cplx mu_bullet(const ResidualPoint& p, const ParamPoint& pt);
// The closed product for the value at -k/2.
cplx mu_bullet_closed(const ParamPoint& pt);
// mu_bullet(-k/2) / G(k) as one product, entire in k.
cplx mu_bullet_over_g(const ParamPoint& pt);
// t^{-j'} prod_{i=1}^{j'} (1 - t^2 q^i)/(1 - q^i) with j' = j - 1 for
// sign +1 and j' = j for sign -1.
cplx weight_ratio(int j, int sign, const ParamPoint& pt);

}  // namespace daha1
