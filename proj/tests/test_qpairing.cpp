#include <doctest.h>

#include <numbers>

#include "daha1/macdonald.hpp"
#include "daha1/qpairing.hpp"
#include "gen.hpp"

using namespace daha1;

namespace {
const RatQT t = RatQT::v_pow(2);
const RatQT q = RatQT::u_pow(4);

// Plain trapezoid over one period, written out independently of periodic_mean.
template <class Fn>
cplx period_mean(Fn f, double a, int nodes) {
  cplx s = 0.0;
  double h = 2.0 * std::numbers::pi * a / nodes;
  for (int i = 0; i < nodes; ++i) s += f(-std::numbers::pi * a + i * h);
  return s / double(nodes);
}

double close(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
}  // namespace

TEST_CASE("mu series coefficients") {
  MuSeries mu = muo_series(3);
  CHECK(mu.coeff(0).is_one());
  CHECK(mu.coeff(1).is_zero());
  CHECK(mu.coeff(2) == (t - RatQT(1)) / (RatQT(1) - q * t));
  CHECK(mu.coeff(-2) == q * mu.coeff(2));
  CHECK_THROWS_AS(mu.coeff(10), std::out_of_range);
}

TEST_CASE("mu series against Fourier coefficients of the product") {
  for (double k : {0.9, 0.35, 2.2}) {
    ParamPoint pt = ParamPoint::from_q(0.2, k);
    cplx ct = mu_ct(pt);
    // (mu)_CT itself
    cplx c0 = period_mean([&](double y) { return mu_numeric(cplx(0, y), pt); }, pt.a(), 512);
    CAPTURE(k);
    CHECK(close(c0, ct) < 1e-12);
    MuSeries mu = muo_series(4);
    for (int n = -8; n <= 8; n += 2) {
      cplx cn = period_mean([&](double y) { return mu_numeric(cplx(0, y), pt) * pt.qpow(-double(n) * cplx(0, y)); },
                            pt.a(), 512);
      CAPTURE(n);
      CHECK(close(cn / ct, rat_eval(mu.coeff(n), pt)) < 1e-10);
    }
  }
}

TEST_CASE("(mu)_CT series") {
  auto s = mu_ct_series(4);
  CHECK(s[0].is_one());
  CHECK(s[1] == (RatQT(1) - t) * (RatQT(1) - t));
  ParamPoint pt = ParamPoint::from_q(0.01, 0.4);
  cplx sum = 0.0;
  for (int n = 0; n <= 4; ++n) sum += rat_eval(s[n], pt) * std::pow(0.01, n);
  CHECK(std::abs(sum - mu_ct(pt)) < 1e-9);
}

TEST_CASE("mu symmetry and k = 0") {
  testgen::Gen g(11);
  for (int i = 0; i < 20; ++i) {
    ParamPoint pt = ParamPoint::from_q(g.real(0.1, 0.6), cplx(g.real(0.1, 2.0), g.real(-0.3, 0.3)));
    cplx x(g.real(-0.05, 0.05), g.real(-3, 3));
    // mu(X) = mu(q^{1/2} X^{-1}): x -> 1/2 - x
    CHECK(close(mu_numeric(x, pt), mu_numeric(0.5 - x, pt)) < 1e-11);
    // period pi a in the imaginary direction
    cplx shift(0, std::numbers::pi * pt.a());
    CHECK(close(mu_numeric(x, pt), mu_numeric(x + shift, pt)) < 1e-11);
  }
  ParamPoint z = ParamPoint::from_q(0.3, 0.0);
  CHECK(std::abs(mu_numeric(cplx(0.1, 0.7), z) - 1.0) < 1e-14);
  CHECK(std::abs(mu_ct(z) - 1.0) < 1e-14);
}

TEST_CASE("pole guard") {
  ParamPoint pt = ParamPoint::from_q(0.3, 0.6);
  CHECK_THROWS_AS(mu_numeric(-0.3, pt), PoleProximity);
  CHECK_THROWS_AS(mu_numeric(cplx(0.8, std::numbers::pi * pt.a()), pt), PoleProximity);
  CHECK(mu_pole_distance(cplx(-0.3, 0.1), pt) == doctest::Approx(0.1));
  PairingContext ctx{pt, -0.3};
  CHECK_THROWS_AS(contour_integral(NumLaurent::constant(1.0), ctx), PoleProximity);
}

TEST_CASE("theta") {
  ParamPoint pt = ParamPoint::from_q(0.4, 0.5);
  cplx X(0.7, 0.4);
  cplx direct = 0.0;
  for (int j = -60; j <= 60; ++j) direct += std::pow(0.4, j * j / 4.0) * std::pow(X, j);
  CHECK(close(theta(X, pt), direct) < 1e-13);
  // theta(q^{1/2} X) = q^{-1/4} X^{-1} theta(X)
  CHECK(close(theta(std::sqrt(0.4) * X, pt), std::pow(0.4, -0.25) / X * theta(X, pt)) < 1e-12);
  ParamPoint small = ParamPoint::from_q(0.9, 0.5);
  cplx Y = std::exp(cplx(3.0, 0.1));  // large |X|, terms without heavy cancellation
  CHECK(close(theta(std::sqrt(0.9) * Y, small), std::pow(0.9, -0.25) / Y * theta(Y, small)) < 1e-11);
}

TEST_CASE("constant-term pairing") {
  CHECK(ct_pair(LaurentPoly::constant(1), LaurentPoly::constant(1)).reduced == RatQT::v_pow(1));
  for (int n = -4; n <= 4; ++n)
    for (int m = -4; m <= 4; ++m) {
      if (n == m) continue;
      CAPTURE(n);
      CAPTURE(m);
      CHECK(ct_pair(epoly(n).poly, epoly(m).poly).reduced.is_zero());
    }
  for (int n = -3; n <= 3; ++n) CHECK_FALSE(ct_pair(epoly(n).poly, epoly(n).poly).reduced.is_zero());
}

TEST_CASE("pairing is symmetric") {
  testgen::Gen g(5);
  for (int i = 0; i < 6; ++i) {
    LaurentPoly f, h;
    for (int j = 0; j < 2; ++j) {
      f.add_term(g.integer(-3, 3), RatQT(g.integer(-4, 4)));
      h.add_term(g.integer(-3, 3), RatQT(g.integer(-4, 4)));
    }
    CHECK(ct_pair(f, h).reduced == ct_pair(h, f).reduced);
  }
}

TEST_CASE("constant term against the contour integral") {
  for (double k : {0.3, 1.4}) {
    ParamPoint pt = ParamPoint::from_q(0.35, k);
    for (int n = -2; n <= 2; ++n) {
      LaurentPoly f = epoly(n).poly, g = LaurentPoly::monomial(2) + LaurentPoly::monomial(-1, RatQT(3));
      PairingContext ctx{pt, 0.0};
      cplx lhs = contour_pair(f, g, ctx);
      cplx rhs = ct_pair(f, g).numeric(pt);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(close(lhs, rhs) < 1e-11);
    }
  }
}

TEST_CASE("half-period contour") {
  ParamPoint pt = ParamPoint::from_q(0.35, 0.7);
  PairingContext ctx{pt, 0.0, false, 0.5};
  NumLaurent even = NumLaurent::monomial(2, 1.0) + NumLaurent::constant(2.0);
  PairingContext full{pt, 0.0};
  CHECK(close(contour_integral(even, ctx), contour_integral(even, full)) < 1e-12);
  CHECK_THROWS_AS(contour_integral(NumLaurent::monomial(1, 1.0), ctx), OddCase);
}

TEST_CASE("serial and parallel quadrature agree bit for bit") {
  ParamPoint pt = ParamPoint::from_q(0.35, cplx(0.8, 0.2));
  NumLaurent F = pairing_integrand(epoly(2).poly, epoly(-1).poly + LaurentPoly::monomial(3), pt);
  for (bool gauss : {false, true}) {
    PairingContext a{pt, 0.1, gauss, 1.0, Exec::serial}, b{pt, 0.1, gauss, 1.0, Exec::parallel};
    CHECK(contour_integral(F, a) == contour_integral(F, b));
  }
}

TEST_CASE("residual point products") {
  testgen::Gen g(3);
  for (int i = 0; i < 10; ++i) {
    ParamPoint pt = ParamPoint::from_q(g.real(0.2, 0.5), cplx(g.real(-3.7, 1.0), g.real(0.05, 0.2)));
    cplx base = mu_bullet(ResidualPoint{0}, pt);
    CHECK(close(base, mu_bullet_closed(pt)) < 1e-10);
    CHECK(close(mu_bullet_over_g(pt) * gauss_normalizer(pt), base) < 1e-10);
    CHECK(close(inverse_gauss_normalizer(pt) * gauss_normalizer(pt), 1.0) < 1e-12);
    for (int j = 1; j <= 3; ++j)
      for (int s : {-1, 1}) {
        CAPTURE(j);
        CAPTURE(s);
        CHECK(close(mu_bullet(ResidualPoint{j, s}, pt) / base, weight_ratio(j, s, pt)) < 1e-9);
      }
  }
}

TEST_CASE("weight ratios and theta contributions") {
  ParamPoint pt = ParamPoint::from_q(0.3, -1.0);
  CHECK(std::abs(weight_ratio(1, 1, pt) - 1.0) < 1e-15);
  // t = 1/q: t^{-1} (1 - t^2 q)/(1 - q) = q (1 - 1/q)/(1 - q) = -1
  CHECK(std::abs(weight_ratio(1, -1, pt) + 1.0) < 1e-13);
  for (double kt : {0.2, -0.7, 1.3}) {
    cplx lhs = theta_contribution(kt + 1.0, pt);
    cplx rhs = std::pow(0.3, -1.0 - 2.0 * kt) * theta_contribution(kt, pt);
    CHECK(close(lhs, rhs) < 1e-12);
  }
  ParamPoint wall = ParamPoint::from_q(0.3, -0.5);
  CHECK_THROWS_AS(gauss_normalizer(wall), PoleProximity);
  CHECK(std::isfinite(std::abs(inverse_gauss_normalizer(wall))));
  CHECK_THROWS_AS(inverse_gauss_normalizer(ParamPoint::from_q(0.3, -2.0)), OnWall);
}
