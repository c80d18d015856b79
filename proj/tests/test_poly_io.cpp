#include <doctest.h>

#include "daha1/poly_io.hpp"
#include "gen.hpp"

using namespace daha1;

TEST_CASE("parse examples") {
  LaurentPoly a = parse_poly("X^2 + 1");
  CHECK(a == LaurentPoly::monomial(2) + LaurentPoly::monomial(0));
  CHECK(parse_poly("t^(1/2)*X^-1") == LaurentPoly::monomial(-1, RatQT::v_pow(1)));
  LaurentPoly c = parse_poly("3/2*X^0 - q^(1/4)*X^3");
  CHECK(c.coeff(0) == RatQT(mpq_class(3, 2)));
  CHECK(c.coeff(3) == -RatQT::u_pow(1));
  CHECK(c.terms().size() == 2);
  CHECK(parse_poly(" X ^ 2+1 ") == a);
  CHECK(parse_poly("q^(1/2)") == LaurentPoly::constant(RatQT::u_pow(2)));
  CHECK(parse_poly("(1 - t)/(1 - q*t)*X").coeff(1) ==
        (RatQT(1) - RatQT::v_pow(2)) / (RatQT(1) - RatQT::u_pow(4) * RatQT::v_pow(2)));
}

TEST_CASE("parse errors") {
  try {
    parse_poly("X^2 + * 1");
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_poly("X^1000001"), ExponentOverflow);
  CHECK_NOTHROW(parse_poly("X^-1000000"));
  CHECK_THROWS_AS(parse_poly("q^(1/3)"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("1/X"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("(X + 1"), SyntaxError);
  CHECK_THROWS_AS(parse_poly(""), SyntaxError);
}

TEST_CASE("property: printer round-trip") {
  testgen::Gen g(5);
  for (int i = 0; i < 150; ++i) {
    LaurentPoly f;
    int n = g.integer(0, 4);
    for (int j = 0; j < n; ++j) f.add_term(g.integer(-6, 6), g.ratqt());
    std::string s = to_string(f);
    CAPTURE(s);
    CHECK(parse_poly(s) == f);
  }
}
