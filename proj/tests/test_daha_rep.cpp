#include <doctest.h>

#include "daha1/daha_rep.hpp"
#include "daha1/poly_io.hpp"

using namespace daha1;

namespace {
RatQT v(int n = 1) { return RatQT::v_pow(n); }
RatQT u(int n = 1) { return RatQT::u_pow(n); }
LaurentPoly X(int n) { return LaurentPoly::monomial(n); }
}  // namespace

TEST_CASE("generator examples") {
  CHECK(apply_generator(Gen::T, X(0)) == X(0).scaled(v()));
  CHECK(apply_generator(Gen::T, X(1)) == X(-1).scaled(v(-1)));
  CHECK(apply_generator(Gen::Y, X(0)) == X(0).scaled(v()));
  // Y(X^-1) = t^{1/2} q^{1/2} X^-1 + (t^{1/2} - t^{-1/2}) q^{-1/2} X
  LaurentPoly expect = X(-1).scaled(v() * u(2)) + X(1).scaled((v() - v(-1)) * u(-2));
  CHECK(apply_generator(Gen::Y, X(-1)) == expect);
}

TEST_CASE("quadratic relation on X by hand") {
  // T^2(X) = X + (1 - t^{-1}) X^{-1}
  LaurentPoly t2 = apply_generator(Gen::T, apply_generator(Gen::T, X(1)));
  CHECK(t2 == X(1) + X(-1).scaled(RatQT(1) - v(-2)));
}

TEST_CASE("division by X^2 - 1") {
  LaurentPoly h = X(3) - X(-1);
  LaurentPoly g = divide_by_x2_minus_1(h);
  CHECK(g * (X(2) - X(0)) == h);
  CHECK_THROWS_AS(divide_by_x2_minus_1(X(2) + X(0)), NonDivisible);
}

TEST_CASE("inverse and composition identities on monomials") {
  for (int m = -5; m <= 5; ++m) {
    LaurentPoly f = X(m);
    CHECK(apply_generator(Gen::Y, apply_generator(Gen::Y_inv, f)) == f);
    CHECK(apply_generator(Gen::X, apply_generator(Gen::X_inv, f)) == f);
    CHECK(apply_generator(Gen::pi, apply_generator(Gen::pi, f)) == f);
    CHECK(apply_generator(Gen::p, apply_generator(Gen::s, f)) ==
          apply_generator(Gen::s, apply_generator(Gen::p_inv, f)));
    // Coefficients of T(X^m) are Laurent monomials in v, never fractions.
    LaurentPoly tf = apply_generator(Gen::T, f);
    for (const auto& [n, c] : tf.terms()) CHECK(c.den().is_one());
  }
}

TEST_CASE("relation sweeps") {
  CHECK(check_daha_relations(0).pass);
  CheckReport r = check_daha_relations(6);
  CHECK(r.pass);
  CHECK(r.params["checked"] == 13 * 10);
  CHECK(check_tau_plus_gaussian(4).pass);
  CHECK(check_fourier_automorphism(4).pass);
}

TEST_CASE("gaussian conjugation of Y on the constant") {
  // gamma^{-1} Y gamma (1) = q^{1/4} t^{1/2} X^{-1}
  GaussianTwisted g = apply_generator(Gen::Y, GaussianTwisted{1, X(0)});
  CHECK(g.gaussian_power == 1);
  CHECK(g.base == X(-1).scaled(u() * v()));
  // gamma Y gamma^{-1} (1) = q^{-1/4} X Y(1)
  GaussianTwisted h = apply_generator(Gen::Y, GaussianTwisted{-1, X(0)});
  CHECK(h.base == X(1).scaled(u(-1) * v()));
}

TEST_CASE("a broken image table is detected") {
  GeneratorImages bad{{{Gen::Y, {{1, {Gen::X}}}}, {Gen::Y_inv, {{1, {Gen::X_inv}}}}}};
  std::vector<Relation> rels = daha_relations();
  const Relation& r2 = rels[1];
  LaurentPoly one = X(0);
  CHECK(apply_expr(bad.substitute(r2.lhs), one) != apply_expr(bad.substitute(r2.rhs), one));
}
