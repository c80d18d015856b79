#include <doctest.h>

#include "daha1/padic.hpp"
#include "gen.hpp"

using namespace daha1;

namespace {
const RatQT v = RatQT::v_pow(1);
const RatQT c = RatQT::v_pow(1) - RatQT::v_pow(-1);
LaurentPoly X(int n) { return LaurentPoly::monomial(n); }

AHAElem random_elem(testgen::Gen& g, int max_len) {
  auto words = words_up_to(max_len);
  AHAElem e;
  int n = g.integer(1, 3);
  for (int i = 0; i < n; ++i)
    e.add_term(words[g.integer(0, static_cast<int>(words.size()) - 1)],
               RatQT(g.integer(-3, 3)) * RatQT::v_pow(g.integer(-2, 2)));
  return e;
}
}  // namespace

TEST_CASE("multiplication examples") {
  CHECK(AHAElem::T(1) * AHAElem::T(1) == AHAElem::T(1).scaled(c) + AHAElem::identity());
  CHECK(AHAElem::pi() * AHAElem::pi() == AHAElem::identity());
  // pi T_1 pi^{-1} = T_0
  CHECK(AHAElem::pi() * AHAElem::T(1) * AHAElem::pi() == AHAElem::T(0));
  CHECK(AHAElem::Y() * AHAElem::Y() == AHAElem::basis(n_omega(2)));
  CHECK(AHAElem::Y() * AHAElem::Y_inv() == AHAElem::identity());
  CHECK(AHAElem::T(0) * AHAElem::T_inv(0) == AHAElem::identity());
  CHECK(n_omega(1) == AHAWord{1, {1}});
  CHECK(n_omega(-1) == AHAWord{1, {0}});
  CHECK(n_omega(3).length() == 3);
  CHECK(n_omega(-4).length() == 4);
}

TEST_CASE("trace and symmetrizer") {
  CHECK(aha_trace(AHAElem::identity()).is_one());
  CHECK(aha_trace(AHAElem::T(1)).is_zero());
  CHECK(aha_trace(AHAElem::symmetrizer()) == RatQT(1) / (RatQT(1) + v * v));
  CHECK(check_symmetrizer_idempotent().pass);
  // T_1 P_+ = t^{1/2} P_+
  CHECK(AHAElem::T(1) * AHAElem::symmetrizer() == AHAElem::symmetrizer().scaled(v));
}

TEST_CASE("length additivity up to length 6") {
  CheckReport r = check_length_additivity(6);
  CHECK(r.pass);
  CHECK(r.params["checked"].get<int>() > 100);
}

TEST_CASE("star is an anti-involution") {
  testgen::Gen g(13);
  for (int i = 0; i < 30; ++i) {
    AHAElem a = random_elem(g, 4), b = random_elem(g, 4);
    CHECK(star(a * b) == star(b) * star(a));
    CHECK(star(star(a)) == a);
  }
}

TEST_CASE("group words") {
  for (const auto& a : words_up_to(5)) {
    CHECK(group_mul(a, group_inverse(a)) == AHAWord{});
    for (const auto& b : words_up_to(3)) CHECK(group_mul(group_mul(a, b), group_inverse(b)) == a);
  }
}

TEST_CASE("Matsumoto spherical functions") {
  CHECK(matsumoto_psi(0).coeffs == X(0));
  CHECK(matsumoto_psi(1).coeffs == X(1).scaled(RatQT::v_pow(-1)));
  CHECK(matsumoto_psi(2).coeffs == X(2).scaled(RatQT::v_pow(-2)));
  SphericalVector m1 = matsumoto_psi(-1);
  CHECK(m1.coeffs.coeff(-1) != RatQT());
  CHECK(m1.element() == matsumoto_psi_element(-1));
  for (int n = -4; n <= 4; ++n) CHECK(matsumoto_psi(n).element() == matsumoto_psi_element(n));
  CHECK_THROWS_AS(spherical_coordinates(AHAElem::T(1)), NonDivisible);
}

TEST_CASE("q = 0 pairing") {
  CHECK(mu0_pair(X(0), X(0)) == v);
  CHECK(mu0_pair(X(1), X(-1)) == mu0_pair(X(-1), X(1)));
  // X T(X) = t^{-1/2}
  CHECK(mu0_pair(X(1), X(1)) == RatQT::v_pow(-1));
}

TEST_CASE("Plancherel formula") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(check_plancherel(X(a), X(b)).pass);
    }
  LaurentPoly f = X(2) + X(-1).scaled(RatQT::v_pow(2)), g = X(1).scaled(RatQT(3)) - X(0);
  CHECK(check_plancherel(f, g).pass);
}

TEST_CASE("positivity at t = 4") {
  for (int m : {0, 1, 2, -1}) {
    AHAElem e = primed_spherical(X(m));
    double val = aha_trace(e * star(e)).eval(0.5, 2.0).real();
    CAPTURE(m);
    CHECK(val > 0);
  }
}

TEST_CASE("q = 0 limit of E-polynomials") {
  for (int n = -5; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(check_e_limit(n).pass);
  }
}
