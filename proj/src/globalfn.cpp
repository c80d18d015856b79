#include "daha1/globalfn.hpp"

#include "daha1/macdonald.hpp"

namespace daha1 {

namespace {

constexpr double kPoleGuard = 1e-10;

// Normalized weight expansion mu / (mu)_CT evaluated at pt, coefficients c_m.
std::vector<cplx> muo_numeric(const ParamPoint& pt, int order) {
  const cplx t = pt.t();
  const double q = pt.q();
  std::vector<cplx> c{1.0};
  for (int m = 0; m < order; ++m) c.push_back(c.back() * (t - std::pow(q, m)) / (1.0 - t * std::pow(q, m + 1)));
  return c;
}

cplx ct_against_muo(const NumLaurent& F, const std::vector<cplx>& c, double q) {
  cplx s = 0.0;
  for (const auto& [e, f] : F.terms()) {
    if (e % 2) continue;
    int m = std::abs(e) / 2;
    // X^e pairs with the X^{-e} coefficient: c_m for e <= 0, q^m c_m for e > 0
    s += f * (e > 0 ? std::pow(q, m) * c.at(m) : c.at(m));
  }
  return s;
}

void guard(cplx d, const char* what) {
  if (std::abs(d) < kPoleGuard) throw PoleProximity(std::string(what) + " has a vanishing denominator");
}

}  // namespace

GlobalFunction::GlobalFunction(const ParamPoint& pt, int max_terms) : pt_(pt) {
  // q^{n^2/4} beats polynomial growth well before this
  const double budget = std::log(1.0 / pt.tail_tol) + 40.0;
  int n_max = static_cast<int>(std::ceil(std::sqrt(4.0 * pt.a() * budget))) + 2;
  n_max = std::min(n_max, max_terms);
  NumericDomain dom(pt);
  std::vector<cplx> c = muo_numeric(pt, n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    NumLaurent P = solve_ppoly(dom, n);
    cplx nrm = ct_against_muo(P * P, c, pt.q());
    if (std::abs(nrm) < 1e-12) throw NormVanishes("(P_" + std::to_string(n) + " P_" + std::to_string(n) + " mu)_CT vanishes");
    polys_.push_back(std::move(P));
    norms_.push_back(nrm);
  }
}

cplx GlobalFunction::p(int n, cplx X) const { return eval_at(polys_.at(n), X); }

SeriesValue GlobalFunction::phi_tilde(cplx X, cplx L) const {
  SeriesValue r{0.0};
  int small = 0;
  const cplx v = pt_.v();
  for (std::size_t n = 0; n < polys_.size(); ++n) {
    double nd = static_cast<double>(n);
    cplx term = pt_.qpow(nd * nd / 4.0) * std::pow(v, static_cast<int>(n)) * eval_at(polys_[n], X) *
                eval_at(polys_[n], L) / norms_[n];
    r.value += term;
    r.terms = static_cast<int>(n) + 1;
    r.tail = std::abs(term);
    small = r.tail < pt_.tail_tol * std::max(1.0, std::abs(r.value)) ? small + 1 : 0;
    if (small >= 2) return r;
  }
  throw NoConvergence("phi_tilde series did not reach the tail tolerance within " + std::to_string(polys_.size()) +
                      " terms");
}

cplx sigma(cplx L, const ParamPoint& pt) {
  const cplx t = pt.t(), L2 = L * L;
  const double q = pt.q();
  cplx r = 1.0;
  double qj = 1.0;
  for (int j = 0; j < 200000; ++j) {
    cplx den = 1.0 - qj * L2;
    guard(den, "sigma");
    r *= (1.0 - t * qj * L2) / den;
    if (qj * std::abs(L2) * std::max(1.0, std::abs(t)) < pt.tail_tol * (1.0 - q)) return r;
    qj *= q;
  }
  throw NoConvergence("sigma product");
}

cplx heine_sum(cplx X, cplx L, const ParamPoint& pt) {
  const cplx t = pt.t(), Li2 = 1.0 / (L * L), z = pt.q() / t * X * X;
  const double q = pt.q();
  if (std::abs(z) >= 1.0) throw OutsideDomain("heine sum needs |q X^2 / t| < 1");
  cplx s = 0.0, term = 1.0;
  double qs1 = 1.0;  // q^{s-1}
  for (int sidx = 1; sidx < 1000000; ++sidx) {
    s += term;
    if (std::abs(term) < pt.tail_tol * std::max(1.0, std::abs(s)) && sidx > 2) return s;
    double qs = qs1 * q;
    cplx den = (1.0 - qs) * (1.0 - qs * Li2);
    guard(den, "heine sum");
    term *= z * (1.0 - t * qs1) * (1.0 - qs1 * t * Li2) / den;
    qs1 = qs;
  }
  throw NoConvergence("heine sum");
}

cplx hc_expansion(cplx X, cplx L, const ParamPoint& pt) {
  const cplx t = pt.t(), vi = 1.0 / pt.v();
  if (!(std::abs(X) < std::abs(pt.v()) / std::sqrt(pt.q())))
    throw OutsideDomain("Harish-Chandra expansion needs |X| < |t|^{1/2} |q|^{-1/2}");
  cplx a = sigma(L, pt) * theta(X * L * vi, pt) * heine_sum(X, L, pt);
  cplx b = sigma(1.0 / L, pt) * theta(X / L * vi, pt) * heine_sum(X, 1.0 / L, pt);
  return mu_ct(pt) / (1.0 + t) * (a + b);
}

namespace {

Json point_params(const ParamPoint& pt, cplx X, cplx L) {
  Json p = param_json(pt);
  auto c = [](cplx z) { return z.imag() == 0.0 ? Json(z.real()) : Json::array({z.real(), z.imag()}); };
  p["X"] = c(X);
  p["L"] = c(L);
  return p;
}

}  // namespace

std::vector<CheckReport> check_phi_symmetry(const GlobalFunction& gf, cplx X, cplx L, double tol) {
  Stopwatch sw;
  const ParamPoint& pt = gf.point();
  cplx base = gf.phi_tilde(X, L).value;
  CheckReport swap = numeric_report("phi_symmetry_swap", point_params(pt, X, L), base, gf.phi_tilde(L, X).value, tol);
  CheckReport inv = numeric_report("phi_symmetry_invert", point_params(pt, X, L), base, gf.phi_tilde(1.0 / X, L).value, tol);
  swap.runtime_ms = inv.runtime_ms = sw.ms();
  return {swap, inv};
}

CheckReport check_hc(const GlobalFunction& gf, cplx X, cplx L, double tol) {
  Stopwatch sw;
  SeriesValue s = gf.phi_tilde(X, L);
  Json p = point_params(gf.point(), X, L);
  p["terms"] = s.terms;
  CheckReport r = numeric_report("hc_expansion", p, hc_expansion(X, L, gf.point()), s.value, tol);
  r.runtime_ms = sw.ms();
  return r;
}

CheckReport recovery_check(const GlobalFunction& gf, int n, const std::vector<cplx>& xs, double tol) {
  Stopwatch sw;
  const ParamPoint& pt = gf.point();
  const cplx Ln = pt.v() * pt.qpow(0.5 * n);
  std::vector<cplx> ratios;
  for (cplx X : xs) ratios.push_back(gf.phi_tilde(X, Ln).value / theta(X, pt) / gf.p(n, X));
  double spread = 0.0;
  for (cplx r : ratios) spread = std::max(spread, std::abs(r - ratios.front()) / std::abs(ratios.front()));
  Json p = param_json(pt);
  p["n"] = n;
  p["samples"] = xs.size();
  CheckReport r = numeric_report("recovery", p, spread, 0.0, tol);
  r.detail = "lhs is the relative spread of phi_tilde / (theta P_n) over the samples";
  r.runtime_ms = sw.ms();
  return r;
}

}  // namespace daha1
