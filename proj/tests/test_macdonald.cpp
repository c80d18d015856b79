#include <doctest.h>

#include "daha1/macdonald.hpp"
#include "daha1/poly_io.hpp"

using namespace daha1;

namespace {
RatQT v(int n = 1) { return RatQT::v_pow(n); }
RatQT u(int n = 1) { return RatQT::u_pow(n); }
const RatQT t = RatQT::v_pow(2);
const RatQT q = RatQT::u_pow(4);
}  // namespace

TEST_CASE("low E-polynomials") {
  CHECK(epoly(0).poly == LaurentPoly::constant(1));
  CHECK(epoly(1).poly == LaurentPoly::monomial(1));
  LaurentPoly em1 = LaurentPoly::monomial(-1) + LaurentPoly::monomial(1, (RatQT(1) - t) / (RatQT(1) - q * t));
  CHECK(epoly(-1).poly == em1);
}

TEST_CASE("triangularity and eigenvalues for |n| <= 8") {
  for (int n = -8; n <= 8; ++n) {
    const EPoly& e = epoly(n);
    CAPTURE(n);
    CHECK(e.poly.coeff(n).is_one());
    for (const auto& [m, c] : e.poly.terms()) CHECK((m == n || order_lower(m, n)));
    CHECK(apply_generator(Gen::Y, e.poly) == e.poly.scaled(e.eigenvalue));
  }
}

TEST_CASE("eigenvalues are distinct monomials") {
  for (int a = -8; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b) CHECK(epoly(a).eigenvalue != epoly(b).eigenvalue);
}

TEST_CASE("order") {
  CHECK(order_lower(0, 1));
  CHECK(order_lower(1, -1));
  CHECK(order_lower(-1, 2));
  CHECK_FALSE(order_lower(-2, 2));
  for (int r = 0; r < 20; ++r) CHECK(order_rank(order_label(r)) == r);
}

TEST_CASE("symmetric polynomials") {
  CHECK(ppoly(0) == LaurentPoly::constant(1));
  CHECK(ppoly(1) == LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
  for (int n = 0; n <= 5; ++n) {
    const LaurentPoly& p = ppoly(n);
    CHECK(p == p.reflected());
    CHECK(p.coeff(n).is_one());
  }
  // Rogers coefficient of X^0 in P_2: (1 + q)(1 - t)/(1 - q t)
  CHECK(ppoly(2).coeff(0) == (RatQT(1) + q) * (RatQT(1) - t) / (RatQT(1) - q * t));
}

TEST_CASE("evaluation at t^{-rho}") {
  CHECK(eval_at_trho(LaurentPoly::constant(1), RhoSign::minus).is_one());
  CHECK(eval_at_trho(epoly(1).poly, RhoSign::minus) == v(-1));
  RatQT c = (RatQT(1) - t) / (RatQT(1) - q * t);
  CHECK(eval_at_trho(epoly(-1).poly, RhoSign::minus) == v() + c * v(-1));
}

TEST_CASE("numeric solve matches the exact polynomials") {
  ParamPoint pt = ParamPoint::from_q(0.37, cplx(0.62, 0.1));
  NumericDomain dom(pt);
  for (int n = -5; n <= 5; ++n) {
    NumLaurent a = solve_epoly(dom, n), b = to_numeric(epoly(n).poly, pt);
    for (const auto& [m, c] : b.terms()) CHECK(std::abs(a.coeff(m) - c) < 1e-12 * std::max(1.0, std::abs(c)));
    CHECK(a.terms().size() == b.terms().size());
  }
}
