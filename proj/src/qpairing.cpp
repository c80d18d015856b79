#include "daha1/qpairing.hpp"

#include <mutex>
#include <numbers>

#include "daha1/daha_rep.hpp"

namespace daha1 {

namespace {

constexpr int kMaxFactors = 200000;

double sqrt_pi_a(const ParamPoint& pt) { return std::sqrt(std::numbers::pi * pt.a()); }

// Truncation point of products of (1 - c q^i) factors.
bool tail_done(double qi_scale, const ParamPoint& pt) { return qi_scale < pt.tail_tol * (1.0 - pt.q()); }

double max_abs(std::initializer_list<cplx> zs) {
  double m = 0.0;
  for (cplx z : zs) m = std::max(m, std::abs(z));
  return m;
}

// Product over i >= 0 of mu's factors at x, dropping the denominator factor
// (family, index) when family is 1 or 2.
cplx mu_product(cplx x, const ParamPoint& pt, int skip_family, int skip_index) {
  const cplx Z = pt.qpow(2.0 * x), W = pt.qpow(1.0 - 2.0 * x), t = pt.t();
  const double q = pt.q();
  cplx r = 1.0;
  double qi = 1.0;
  for (int i = 0; i < kMaxFactors; ++i) {
    cplx d1 = 1.0 - t * qi * Z, d2 = 1.0 - t * qi * W;
    if (skip_family == 1 && i == skip_index) d1 = 1.0;
    if (skip_family == 2 && i == skip_index) d2 = 1.0;
    if (skip_family && (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12))
      throw PoleProximity("a second denominator factor of mu vanishes at the residual point");
    r *= (1.0 - qi * Z) * (1.0 - qi * W) / (d1 * d2);
    if (i > skip_index && tail_done(qi * max_abs({Z, W, t * Z, t * W}), pt)) return r;
    qi *= q;
  }
  throw NoConvergence("mu product did not reach the tail tolerance");
}

double contour_pole_distance(double eps, const ParamPoint& pt) {
  // Poles sit on the lines Re x = -(Re k + i)/2 and (Re k + 1 + i)/2, i >= 0.
  const double kr = pt.k().real();
  double best = INFINITY;
  auto family = [&](double base, double sgn) {
    double i0 = sgn * 2.0 * (eps - base);
    for (double i : {std::floor(i0), std::ceil(i0), 0.0}) {
      if (i < 0) continue;
      best = std::min(best, std::abs(eps - (base + sgn * i / 2.0)));
    }
  };
  family(-kr / 2.0, -1.0);
  family((kr + 1.0) / 2.0, 1.0);
  return best;
}

}  // namespace

// ---------------------------------------------------------------- exact

RatQT MuSeries::coeff(int n) const {
  if (n % 2) return RatQT();
  int m = std::abs(n) / 2;
  if (m > order()) throw std::out_of_range("MuSeries: order too small for X^" + std::to_string(n));
  // q^m sits on the negative side
  return n >= 0 ? c[m] : c[m] * RatQT::u_pow(4 * m);
}

MuSeries muo_series(int order) {
  static std::mutex mu;
  static std::vector<RatQT> cache{RatQT(1)};
  std::lock_guard lock(mu);
  const RatQT t = RatQT::v_pow(2);
  while (static_cast<int>(cache.size()) <= order) {
    int m = static_cast<int>(cache.size()) - 1;
    // c_{m+1} = c_m (t - q^m) / (1 - t q^{m+1})
    cache.push_back(cache.back() * (t - RatQT::u_pow(4 * m)) / (RatQT(1) - t * RatQT::u_pow(4 * (m + 1))));
  }
  return MuSeries{std::vector<RatQT>(cache.begin(), cache.begin() + order + 1)};
}

std::vector<RatQT> mu_ct_series(int order) {
  std::vector<RatQT> s(order + 1);
  s[0] = RatQT(1);
  const RatQT t = RatQT::v_pow(2), t2 = RatQT::v_pow(4);
  auto mul_binomial = [&](int step, const RatQT& c) {  // times (1 - c q^step)
    for (int n = order; n >= step; --n) s[n] -= c * s[n - step];
  };
  auto div_binomial = [&](int step, const RatQT& c) {  // times 1/(1 - c q^step)
    for (int n = step; n <= order; ++n) s[n] += c * s[n - step];
  };
  for (int i = 1; i <= order; ++i) {
    mul_binomial(i, t);
    mul_binomial(i, t);
    div_binomial(i, t2);
    div_binomial(i, RatQT(1));
  }
  return s;
}

cplx CtValue::numeric(const ParamPoint& pt) const { return rat_eval(reduced, pt) * mu_ct(pt); }

CtValue ct_of(const LaurentPoly& F) {
  if (F.is_zero()) return {RatQT()};
  int spread = std::max(std::abs(F.min_deg()), std::abs(F.max_deg()));
  MuSeries mu = muo_series(spread / 2 + 1);
  RatQT s;
  for (const auto& [n, c] : F.terms())
    if (n % 2 == 0) s += c * mu.coeff(-n);
  return {s};
}

CtValue ct_pair(const LaurentPoly& f, const LaurentPoly& g) {
  return ct_of(f * apply_generator(Gen::T, g));
}

// ---------------------------------------------------------------- numeric

double mu_pole_distance(cplx x, const ParamPoint& pt) {
  const cplx k = pt.k();
  const double half_period = std::numbers::pi * pt.a();
  double best = INFINITY;
  auto family = [&](cplx base, double sgn) {
    // poles base + sgn * i / 2 + pi a i n
    double i0 = sgn * 2.0 * (x.real() - base.real());
    for (double i : {std::floor(i0), std::ceil(i0), 0.0}) {
      if (i < 0) continue;
      cplx d = x - (base + sgn * i / 2.0);
      double im = std::remainder(d.imag(), half_period);
      best = std::min(best, std::hypot(d.real(), im));
    }
  };
  family(-0.5 * k, -1.0);
  family(0.5 * (k + 1.0), 1.0);
  return best;
}

cplx mu_numeric(cplx x, const ParamPoint& pt) {
  if (mu_pole_distance(x, pt) < 1e-6 * pt.period())
    throw PoleProximity("mu evaluated within the pole guard at x = " + std::to_string(x.real()) + "+" +
                        std::to_string(x.imag()) + "i");
  return mu_product(x, pt, 0, -1);
}

cplx mu_ct(const ParamPoint& pt) {
  const cplx t = pt.t();
  const double q = pt.q();
  cplx r = 1.0;
  double qi = q;
  for (int i = 1; i < kMaxFactors; ++i) {
    cplx a = 1.0 - t * qi;
    r *= a * a / ((1.0 - t * t * qi) * (1.0 - qi));
    if (tail_done(qi * max_abs({t, t * t, 1.0}), pt)) return r;
    qi *= q;
  }
  throw NoConvergence("(mu)_CT product did not converge");
}

cplx eval_at_x(const NumLaurent& F, cplx x, const ParamPoint& pt) {
  cplx s = 0.0;
  for (const auto& [n, c] : F.terms()) s += c * pt.qpow(static_cast<double>(n) * x);
  return s;
}

cplx theta(cplx X, const ParamPoint& pt) {
  const double a = pt.a();
  const cplx L = std::log(X);
  const double peak = 2.0 * a * L.real();
  const double width = 2.0 * std::sqrt(a * std::log(1.0 / pt.tail_tol)) + 2.0;
  const long lo = static_cast<long>(std::floor(peak - width)), hi = static_cast<long>(std::ceil(peak + width));
  cplx s = 0.0;
  for (long j = lo; j <= hi; ++j) {
    double jd = static_cast<double>(j);
    s += std::exp(jd * L - jd * jd / (4.0 * a));
  }
  return s;
}

NumLaurent pairing_integrand(const LaurentPoly& f, const LaurentPoly& g, const ParamPoint& pt) {
  return to_numeric(f * apply_generator(Gen::T, g), pt);
}

cplx contour_integral(const NumLaurent& F, const PairingContext& ctx, QuadResult* info) {
  const ParamPoint& pt = ctx.pt;
  if (contour_pole_distance(ctx.epsilon, pt) < 1e-6 * pt.period())
    throw PoleProximity("contour Re x = " + std::to_string(ctx.epsilon) + " passes through poles of mu");
  QuadOptions opt;
  opt.tol = pt.quad_tol;
  opt.max_nodes = pt.max_nodes;
  opt.exec = ctx.exec;
  const double pa = std::numbers::pi * pt.a();
  QuadResult res;
  if (ctx.gaussian) {
    auto integrand = [&](double y) {
      cplx x(ctx.epsilon, y);
      return eval_at_x(F, x, pt) * theta(pt.qpow(x), pt) * mu_product(x, pt, 0, -1);
    };
    res = periodic_mean(integrand, -pa, 2.0 * pa, opt);
    res.mean *= sqrt_pi_a(pt);
  } else {
    double twice = 2.0 * ctx.M;
    if (!(ctx.M > 0) || twice != std::floor(twice)) throw std::invalid_argument("period multiple must be a positive half-integer");
    if (static_cast<long>(twice) % 2 == 1 && !F.is_even())
      throw OddCase("a half-period contour needs an integrand in X^{+-2}");
    auto integrand = [&](double y) {
      cplx x(ctx.epsilon, y);
      return eval_at_x(F, x, pt) * mu_product(x, pt, 0, -1);
    };
    res = periodic_mean(integrand, -pa * ctx.M, 2.0 * pa * ctx.M, opt);
  }
  if (info) *info = res;
  return res.mean;
}

cplx contour_pair(const LaurentPoly& f, const LaurentPoly& g, const PairingContext& ctx) {
  return contour_integral(pairing_integrand(f, g, ctx.pt), ctx);
}

// ---------------------------------------------------------------- special factors

cplx gauss_normalizer(const ParamPoint& pt) {
  const cplx qk = pt.qpow(pt.k()), q2k = qk * qk;
  const double q = pt.q();
  cplx r = 1.0;
  double qj = q;
  for (int j = 1; j < kMaxFactors; ++j) {
    cplx den = 1.0 - q2k * qj;
    if (std::abs(den) < 1e-13) throw PoleProximity("G(k) has a pole at k = " + std::to_string(pt.k().real()));
    r *= (1.0 - qk * qj) / den;
    if (tail_done(qj * max_abs({qk, q2k}), pt)) return sqrt_pi_a(pt) * r;
    qj *= q;
  }
  throw NoConvergence("G(k) product");
}

cplx inverse_gauss_normalizer(const ParamPoint& pt) {
  const cplx qk = pt.qpow(pt.k()), q2k = qk * qk;
  const double q = pt.q();
  cplx r = 1.0;
  double qj = q;
  for (int j = 1; j < kMaxFactors; ++j) {
    cplx den = 1.0 - qk * qj;
    if (std::abs(den) < 1e-13) throw OnWall("1/G(k) is singular at k = " + std::to_string(pt.k().real()));
    r *= (1.0 - q2k * qj) / den;
    if (tail_done(qj * max_abs({qk, q2k}), pt)) return r / sqrt_pi_a(pt);
    qj *= q;
  }
  throw NoConvergence("1/G(k) product");
}

cplx theta_contribution(cplx kt, const ParamPoint& pt) {
  const double a = pt.a();
  const double width = std::sqrt(a * std::log(1.0 / pt.tail_tol)) + 2.0;
  const long lo = static_cast<long>(std::floor(-kt.real() - width)), hi = static_cast<long>(std::ceil(-kt.real() + width));
  cplx s = 0.0;
  for (long m = lo; m <= hi; ++m) {
    double md = static_cast<double>(m);
    s += pt.qpow(md * md + 2.0 * md * kt);
  }
  return sqrt_pi_a(pt) * s;
}

cplx mu_bullet(const ResidualPoint& p, const ParamPoint& pt) {
  cplx x = p.value(pt);
  if (p.j == 0 || p.sign < 0) return mu_product(x, pt, 1, p.j);
  return mu_product(x, pt, 2, p.j - 1);
}

cplx mu_bullet_closed(const ParamPoint& pt) {
  const cplx qk = pt.qpow(pt.k()), qmk = 1.0 / qk;
  const double q = pt.q();
  cplx r = 1.0;
  double qj = 1.0;
  for (int j = 0; j < kMaxFactors; ++j) {
    cplx den = (1.0 - q * qj) * (1.0 - qk * qk * q * qj);
    if (std::abs(den) < 1e-13) throw PoleProximity("mu_bullet(-k/2) is singular at k = " + std::to_string(pt.k().real()));
    r *= (1.0 - qk * q * qj) * (1.0 - qmk * qj) / den;
    if (tail_done(qj * max_abs({qk * q, qmk, qk * qk * q}), pt)) return r;
    qj *= q;
  }
  throw NoConvergence("mu_bullet product");
}

cplx mu_bullet_over_g(const ParamPoint& pt) {
  const cplx qmk = pt.qpow(-pt.k());
  const double q = pt.q();
  cplx r = 1.0;
  double qj = 1.0;
  for (int j = 0; j < kMaxFactors; ++j) {
    r *= (1.0 - qmk * qj) / (1.0 - q * qj);
    if (tail_done(qj * std::abs(qmk), pt)) return r / sqrt_pi_a(pt);
    qj *= q;
  }
  throw NoConvergence("mu_bullet/G product");
}

cplx weight_ratio(int j, int sign, const ParamPoint& pt) {
  if (j < 1) throw std::invalid_argument("weight_ratio: need j >= 1");
  int jp = sign > 0 ? j - 1 : j;
  const cplx t = pt.t();
  cplx r = std::pow(t, -jp);
  double qi = 1.0;
  for (int i = 1; i <= jp; ++i) {
    qi *= pt.q();
    r *= (1.0 - t * t * qi) / (1.0 - qi);
  }
  return r;
}

}  // namespace daha1
