#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssp/polynomial.h"

using ssp::PrimePoly;
using ssp::Rational;
using ssp::RationalPoly;

TEST_CASE("rational poly parse and print") {
  RationalPoly p = RationalPoly::parse("x^2 + 8x + 1");
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 8);
  CHECK(p.str() == "x^2 + 8*x + 1");

  RationalPoly q = RationalPoly::parse("(x+256)^3");
  CHECK(q.degree() == 3);
  CHECK(q.coeff(0) == 16777216);
  CHECK(q.coeff(2) == 768);

  RationalPoly r = RationalPoly::parse("(T-1)^2(T-9)^6T^3");
  CHECK(r.degree() == 11);
  CHECK(r.coeff(0) == 0);
  CHECK(r.coeff(3) == Rational(531441));  // (-1)^2 * (-9)^6

  CHECK_THROWS_AS(RationalPoly::parse("(x+1"), ssp::error);
  CHECK_THROWS_AS(RationalPoly::parse("x+%"), ssp::error);
}

TEST_CASE("rational poly arithmetic") {
  RationalPoly a = RationalPoly::parse("x^2 - 1");
  RationalPoly b = RationalPoly::parse("x - 1");
  RationalPoly q, r;
  RationalPoly::divrem(a, b, q, r);
  CHECK(q == RationalPoly::parse("x + 1"));
  CHECK(r.is_zero());
  CHECK(a.divexact(b) == q);
  CHECK_THROWS_AS(RationalPoly::parse("x^2 + 1").divexact(b), ssp::error);

  CHECK(a.derivative() == RationalPoly::parse("2x"));
  CHECK(a.eval(3) == 8);
  CHECK((a * b).degree() == 3);
}

TEST_CASE("gcd and radical") {
  RationalPoly p = RationalPoly::parse("(x+2)^3(x-5)^2(x^2+x+1)");
  CHECK(radical(p) == RationalPoly::parse("(x+2)(x-5)(x^2+x+1)").monic());
  CHECK(poly_gcd(RationalPoly::parse("(x+1)(x+2)"), RationalPoly::parse("(x+2)(x+3)")) ==
        RationalPoly::parse("x+2"));
  CHECK(poly_gcd(RationalPoly::parse("x+1"), RationalPoly()) == RationalPoly::parse("x+1"));
  // radical of the level 2 relation numerator minus 1728 * denominator
  RationalPoly f = RationalPoly::parse("(x+256)^3") - RationalPoly::parse("x^2") * Rational(1728);
  CHECK(radical(f) == RationalPoly::parse("(x-512)(x+64)").monic());
}

TEST_CASE("prime poly arithmetic") {
  PrimePoly a(13, {1, 8, 1});  // x^2 + 8x + 1
  PrimePoly b(13, {1, 1});     // x + 1
  PrimePoly prod = a * b;
  CHECK(prod.degree() == 3);
  CHECK(prod.coeff(0) == 1);
  CHECK(prod.coeff(1) == 9);
  CHECK(prod.coeff(2) == 9);
  CHECK(prod % b == PrimePoly::zero(13));
  CHECK(prod.divexact(b) == a);
  CHECK(poly_gcd(prod, b) == b.monic());
  CHECK(a.eval(5) == (25 + 40 + 1) % 13);

  PrimePoly c(7, {3, 5});
  CHECK((c * PrimePoly::constant(7, 3)).monic().lead() == 1);
}

TEST_CASE("x_pow_mod") {
  // x^5 mod x^2+1 over F_5: x^4 = 1, so x^5 = x
  PrimePoly f(5, {1, 0, 1});
  CHECK(x_pow_mod(ssp::Integer(5), f) == PrimePoly::x(5));
  PrimePoly g(13, {12, 1});  // x - 1: x^13 mod (x-1) = 1
  CHECK(x_pow_mod(ssp::Integer(13), g) == PrimePoly::constant(13, 1));
}

TEST_CASE("reduce_mod") {
  RationalPoly p({Rational(1, 3), Rational(2)});
  PrimePoly r = reduce_mod(p, 5);
  CHECK(r.coeff(0) == 2);  // 1/3 = 2 mod 5
  CHECK(r.coeff(1) == 2);
  CHECK_THROWS_AS(reduce_mod(p, 3), ssp::error);  // 3 divides the denominator
  CHECK(ssp::mod_inverse(3, 5) == 2);
  CHECK_THROWS_AS(ssp::mod_inverse(5, 10), ssp::error);
}
