#include "daha1/continuation.hpp"

#include <Eigen/Dense>

#include "daha1/macdonald.hpp"

namespace daha1 {

namespace {

int residual_m(cplx k) { return static_cast<int>(std::floor(-k.real())); }

NumLaurent numeric_at(const LaurentPoly& F, const ParamPoint& pt) { return to_numeric(F, pt); }

// F at each residual point times A(point) times the closed ratio.
cplx residue_sum(const NumLaurent& F, const ResidualData& R, const ParamPoint& pt) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < R.points.size(); ++i)
    s += theta_contribution(R.values[i], pt) * R.ratios[i] * eval_at_x(F, R.values[i], pt);
  return s;
}

// Partial sums of sum_{j >= j0} term(j) until |term| < term_tol max(1, |sum|).
template <class Fn>
cplx tail_sum(Fn term, int j0, double term_tol, int* used = nullptr) {
  cplx s = 0.0;
  double prev = INFINITY;
  int growing = 0;
  for (int j = j0; j < j0 + 100000; ++j) {
    cplx tj = term(j);
    s += tj;
    double a = std::abs(tj);
    if (!std::isfinite(a)) throw SumDiverges("residue series overflowed at j = " + std::to_string(j));
    if (a < term_tol * std::max(1.0, std::abs(s))) {
      if (used) *used = j - j0 + 1;
      return s;
    }
    growing = (a >= prev && j > j0 + 50) ? growing + 1 : 0;
    if (growing > 20) throw SumDiverges("ratio test failed at j = " + std::to_string(j));
    prev = a;
  }
  throw SumDiverges("residue series did not reach the term tolerance");
}

Json poly_param(Json p, const std::string& name, const LaurentPoly& F) {
  p[name] = to_string(F);
  return p;
}

}  // namespace

void require_off_wall(const ParamPoint& pt) {
  double kr = pt.k().real();
  if (kr > kWallGuard) return;
  double d = std::abs(kr - std::round(kr));
  if (d < kWallGuard) throw OnWall("Re k = " + std::to_string(kr) + " is within the wall guard");
}

ResidualData residual_points(const ParamPoint& pt) {
  if (!(pt.k().real() < 0)) throw OutsideDomain("residual points need Re k < 0");
  require_off_wall(pt);
  ResidualData R;
  R.k = pt.k();
  R.m = residual_m(R.k);
  R.points.push_back(ResidualPoint{0, -1});
  for (int j = 1; j <= R.m; ++j) {
    R.points.push_back(ResidualPoint{j, -1});
    R.points.push_back(ResidualPoint{j, 1});
  }
  // mu_bullet itself has a pole where G does (k = -1/2 - m); only the ratios
  // enter the regularized form, so the weights are then left undefined.
  cplx base = NAN;
  try {
    base = mu_bullet(ResidualPoint{0}, pt);
  } catch (const PoleProximity&) {
    R.weights_finite = false;
  }
  for (const auto& p : R.points) {
    cplx x = p.value(pt);
    cplx ratio = p.j == 0 ? cplx(1.0) : weight_ratio(p.j, p.sign, pt);
    R.values.push_back(x);
    R.ratios.push_back(ratio);
    if (!R.weights_finite) {
      R.weights.push_back(NAN);
      R.weights_direct.push_back(NAN);
      continue;
    }
    cplx A = theta_contribution(x, pt);
    cplx direct = A * mu_bullet(p, pt);
    R.weights.push_back(A * base * ratio);
    R.weights_direct.push_back(direct);
    R.max_weight_gap = std::max(R.max_weight_gap, std::abs(R.weights.back() - direct) / std::max(1.0, std::abs(direct)));
  }
  return R;
}

cplx gaussian_pairing(const NumLaurent& F, const ParamPoint& pt, double eps, Exec exec) {
  PairingContext ctx{pt, eps, true, 1.0, exec};
  return contour_integral(F, ctx);
}

cplx shapovalov_form(const LaurentPoly& f, const LaurentPoly& g, const ParamPoint& pt, ShapovalovBranch branch,
                     Exec exec) {
  const double kr = pt.k().real();
  if (branch == ShapovalovBranch::automatic)
    branch = kr > -0.5 ? ShapovalovBranch::quarter : ShapovalovBranch::residue;
  const NumLaurent F = pairing_integrand(f, g, pt);
  if (branch == ShapovalovBranch::quarter) {
    if (!(kr > -0.5)) throw OutsideDomain("the Re x = 1/4 contour needs Re k > -1/2");
    return gaussian_pairing(F, pt, 0.25, exec) / (pt.v() * gauss_normalizer(pt));
  }
  if (!(kr < 0)) throw OutsideDomain("the residue branch needs Re k < 0");
  require_off_wall(pt);
  if (!F.is_even()) throw OddCase("f T(g) has odd powers of X; doubled residue weights are not available");
  ResidualData R = residual_points(pt);
  cplx phi0 = gaussian_pairing(F, pt, 0.0, exec);
  return (phi0 * inverse_gauss_normalizer(pt) + mu_bullet_over_g(pt) * residue_sum(F, R, pt)) / pt.v();
}

CheckReport verify_ct_identity_72(const LaurentPoly& F, const ParamPoint& pt, double M, double tol) {
  Stopwatch sw;
  Json params = param_json(pt);
  params["M"] = M;
  params = poly_param(params, "F", F);
  if (!F.is_even()) throw OddCase("F must lie in the span of X^{2m}");
  const NumLaurent Fn = numeric_at(F, pt);
  cplx lhs = ct_of(F).numeric(pt);
  PairingContext ctx{pt, 0.0, false, M};
  cplx rhs = contour_integral(Fn, ctx);
  if (pt.k().real() < 0) {
    ResidualData R = residual_points(pt);
    cplx corr = 0.0;
    for (std::size_t i = 0; i < R.points.size(); ++i) corr += eval_at_x(Fn, R.values[i], pt) * R.ratios[i];
    rhs += mu_bullet(ResidualPoint{0}, pt) * corr;
    params["residual_points"] = R.points.size();
  } else {
    require_off_wall(pt);
  }
  CheckReport r = numeric_report("thm72", params, lhs, rhs, tol);
  r.runtime_ms = sw.ms();
  return r;
}

std::vector<CheckReport> verify_prop73(const LaurentPoly& F, const ParamPoint& pt, int m, double tol, double term_tol) {
  Stopwatch sw;
  const cplx k = pt.k();
  if (m < 0 || !(k.real() < -m)) throw OutsideDomain("need Re k < -m with m >= 0");
  require_off_wall(pt);
  if (!F.is_even() || (!F.is_zero() && F.min_deg() < -2 * m))
    throw OutsideDomain("F must lie in X^{-2m} R[X^2]");
  const NumLaurent Fn = numeric_at(F, pt);
  const cplx mb = mu_bullet(ResidualPoint{0}, pt);
  auto plus_term = [&](int j) { return eval_at_x(Fn, 0.5 * (k + double(j)), pt) * weight_ratio(j, 1, pt); };
  Json params = poly_param(param_json(pt), "F", F);
  params["m"] = m;

  int used = 0;
  cplx ct_rhs = mb * tail_sum(plus_term, 1, term_tol, &used);
  Json p1 = params;
  p1["terms"] = used;
  CheckReport ct = numeric_report("prop73_ct", p1, ct_of(F).numeric(pt), ct_rhs, tol);

  const int mm = residual_m(k);
  cplx finite = -eval_at_x(Fn, -0.5 * k, pt);
  for (int j = 1; j <= mm; ++j) finite -= eval_at_x(Fn, -0.5 * (k + double(j)), pt) * weight_ratio(j, -1, pt);
  cplx half_rhs = mb * (finite + tail_sum(plus_term, mm + 1, term_tol, &used));
  PairingContext ctx{pt, 0.0, false, 0.5};
  Json p2 = params;
  p2["terms"] = used;
  CheckReport half = numeric_report("prop73_half_period", p2, contour_integral(Fn, ctx), half_rhs, tol);
  ct.runtime_ms = half.runtime_ms = sw.ms();
  return {ct, half};
}

double gram_min_singular(const std::vector<int>& exponents, const ParamPoint& pt) {
  const int n = static_cast<int>(exponents.size());
  Eigen::MatrixXcd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G(i, j) = shapovalov_form(LaurentPoly::monomial(exponents[i]), LaurentPoly::monomial(exponents[j]), pt);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G);
  return svd.singularValues().minCoeff();
}

std::vector<CheckReport> radical_check(int m, double q) {
  if (m < 0 || m > 1) throw OutsideDomain("radical_check covers m = 0 and m = 1");
  Stopwatch sw;
  const double k0 = -0.5 - m;
  const std::vector<int> window{-2, 0, 2, 4};
  std::vector<CheckReport> out;

  // Lower bound checks carry the shortfall below the floor as abs_err.
  auto floor_report = [](std::string id, Json params, double value, double floor) {
    CheckReport r = numeric_report(std::move(id), std::move(params), value, floor, 0.0);
    r.abs_err = std::max(0.0, floor - value);
    r.pass = value >= floor;
    r.detail = "lower bound: lhs must be at least rhs";
    return r;
  };

  ParamPoint at = ParamPoint::from_q(q, k0);
  Json win = Json::array({"X^-2", "1", "X^2", "X^4"});
  Json p = param_json(at);
  p["window"] = win;
  out.push_back(numeric_report("radical_gram_singular", p, gram_min_singular(window, at), 0.0, 1e-6));
  for (double d : {-0.05, 0.05}) {
    ParamPoint near = ParamPoint::from_q(q, k0 + d);
    Json pn = param_json(near);
    pn["window"] = win;
    out.push_back(floor_report("radical_gram_control", pn, gram_min_singular(window, near), 1e-2));
  }

  // The literal probe {E_{2m+1} X, X^2}, and the same with E_{-(2m+1)}.
  const LaurentPoly X2 = LaurentPoly::monomial(2), X1 = LaurentPoly::monomial(1);
  for (int n : {2 * m + 1, -(2 * m + 1)}) {
    const LaurentPoly h = epoly(n).poly * X1;
    Json pp = param_json(at);
    pp["f"] = "E_" + std::to_string(n) + "*X";
    pp["g"] = "X^2";
    std::string id = n > 0 ? "radical_probe" : "radical_probe_negative";
    out.push_back(numeric_report(id, pp, shapovalov_form(h, X2, at), 0.0, 1e-8));
    ParamPoint off = ParamPoint::from_q(q, k0 + 0.1);
    Json po = param_json(off);
    po["f"] = pp["f"];
    po["g"] = "X^2";
    out.push_back(floor_report(id + "_control", po, std::abs(shapovalov_form(h, X2, off)), 1e-3));
  }
  for (auto& r : out) r.runtime_ms = sw.ms();
  return out;
}

cplx wall_limit(const LaurentPoly& f, const LaurentPoly& g, double q, double wall, int side,
                const std::vector<double>& deltas) {
  const std::size_t n = deltas.size();
  std::vector<cplx> vals(n);
  for (std::size_t i = 0; i < n; ++i)
    vals[i] = shapovalov_form(f, g, ParamPoint::from_q(q, wall + side * deltas[i]));
  // Lagrange interpolation in delta, evaluated at delta = 0
  cplx s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) w *= deltas[j] / (deltas[j] - deltas[i]);
    s += w * vals[i];
  }
  return s;
}

}  // namespace daha1
