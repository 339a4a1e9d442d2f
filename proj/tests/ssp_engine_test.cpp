#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "ssp/modular_curves.h"
#include "ssp/ssp_engine.h"
#include "ssp/suites.h"

using ssp::FormKind;
using ssp::PrimePoly;
using ssp::QSeries;
using ssp::Rational;
using ssp::RationalPoly;

TEST_CASE("weight decomposition") {
  auto check = [](long p, long m, long d, long e) {
    ssp::WeightDecomposition w = ssp::decompose_weight(p);
    CHECK(w.m == m);
    CHECK(w.delta == d);
    CHECK(w.epsilon == e);
  };
  check(5, 0, 1, 0);
  check(11, 0, 1, 1);
  check(13, 1, 0, 0);
  check(29, 2, 1, 0);
  check(59, 4, 1, 1);
  for (long p : ssp::primes_in(5, 200)) {
    ssp::WeightDecomposition w = ssp::decompose_weight(p);
    CHECK(p - 1 == 12 * w.m + 4 * w.delta + 6 * w.epsilon);
  }
  CHECK_THROWS_AS(ssp::decompose_weight(4), ssp::error);
}

TEST_CASE("the supported set is exactly the genus zero levels") {
  for (long n = 1; n <= 30; n++) {
    bool supported = ssp::is_supported_level(n);
    CHECK(supported == (ssp::genus_x0(n).genus == 0));
  }
}

TEST_CASE("eisenstein preconditions") {
  CHECK_THROWS_AS(ssp::eisenstein(3, 5), ssp::error);
  CHECK_THROWS_AS(ssp::eisenstein(2, 5), ssp::error);
  CHECK_THROWS_AS(ssp::eisenstein(4, 0), ssp::error);
}

TEST_CASE("principal moduli") {
  QSeries t2 = ssp::hauptmodul(2, 3);
  CHECK(t2.valuation() == -1);
  CHECK(t2.coeff(-1) == 1);
  CHECK(t2.coeff(0) == -24);
  CHECK(t2.coeff(1) == 276);

  QSeries j = ssp::hauptmodul(1, 2);
  CHECK(j.coeff(-1) == 1);
  CHECK(j.coeff(0) == 744);
  CHECK(j.coeff(1) == 196884);

  CHECK(ssp::hauptmodul(25, 4).valuation() == -1);
  CHECK_THROWS_AS(ssp::hauptmodul(11, 5), ssp::error);
}

TEST_CASE("Delta_N valuations") {
  const std::map<long, long> expected = {{1, 1},  {2, 3},   {3, 4},   {4, 6},  {5, 6},
                                         {6, 12}, {7, 8},   {8, 12},  {9, 12}, {10, 18},
                                         {12, 24}, {13, 14}, {16, 24}, {18, 36}, {25, 30}};
  for (auto [n, v] : expected) {
    CHECK(ssp::delta_valuation(n) == v);
    QSeries d = ssp::delta_n(n, v + 3);
    CHECK(d.valuation() == v);
    CHECK(d.coeff(v) == 1);
  }
  CHECK_THROWS_AS(ssp::delta_n(11, 10), ssp::error);
}

TEST_CASE("expressing series as polynomials in the principal modulus") {
  QSeries t2 = ssp::hauptmodul(2, 8);
  CHECK(ssp::to_hauptmodul_poly(t2, 2) == RationalPoly::x());
  CHECK(ssp::to_hauptmodul_poly(QSeries::monomial(5, 0, 6), 2) ==
        RationalPoly::constant(5));
  // E_4 is not a modular function for Gamma_0(2)
  CHECK_THROWS_AS(ssp::to_hauptmodul_poly(ssp::eisenstein(4, 8), 2), ssp::error);
}

TEST_CASE("f polynomials") {
  CHECK(ssp::f_poly(FormKind::E, 5, 2) == RationalPoly::constant(1));
  // E_10 = E_4 E_6, so the p = 11 polynomial is the constant 1 as well
  CHECK(ssp::f_poly(FormKind::E, 11, 2) == RationalPoly::constant(1));

  RationalPoly f13 = ssp::f_poly(FormKind::E, 13, 1);
  CHECK(f13.degree() == 1);
  // mod 13 the only supersingular j-invariant is 5
  PrimePoly red = reduce_mod(f13, 13).monic();
  CHECK(red == PrimePoly(13, {8, 1}));
  CHECK(f13.coeff(0) == Rational(-432000, 691));

  RationalPoly f13_2 = ssp::f_poly(FormKind::E, 13, 2);
  CHECK(f13_2.degree() == 3);
  PrimePoly red2 = reduce_mod(f13_2, 13).monic();
  CHECK(red2 == PrimePoly(13, {1, 9, 9, 1}));  // (x+1)(x^2+8x+1)

  CHECK(ssp::f_poly(FormKind::E, 29, 2).degree() == 6);
  CHECK_THROWS_AS(ssp::f_poly(FormKind::E, 5, 5), ssp::error);

  // degree equals m * val(Delta_N)
  for (long n : {1L, 2L, 6L, 13L})
    for (long p : {13L, 29L, 37L}) {
      if (n % p == 0) continue;
      ssp::WeightDecomposition w = ssp::decompose_weight(p);
      CHECK(ssp::f_poly(FormKind::E, p, n).degree() == w.m * ssp::delta_valuation(n));
    }
}

TEST_CASE("g polynomials") {
  CHECK(ssp::g_poly(11, 2) == RationalPoly::parse("(x+256)(x-512)(x+64)"));
  CHECK(ssp::g_poly(13, 1) == RationalPoly::constant(1));
  CHECK(ssp::g_poly(5, 3) == RationalPoly::parse("(x+27)(x+243)"));
  CHECK(ssp::g_poly(5, 1) == RationalPoly::x());
  CHECK(ssp::g_poly(7, 1) == RationalPoly::parse("x-1728"));
}

TEST_CASE("supersingular polynomials and splitting") {
  CHECK(ssp::supersingular_poly(FormKind::E, 5, 2) == PrimePoly(5, {1, 1}));
  ssp::SignedPrimePoly s5 = ssp::supersingular_poly_signed(FormKind::E, 5, 2);
  CHECK(s5.sign == 1);
  ssp::SignedPrimePoly g5 = ssp::supersingular_poly_signed(FormKind::G, 5, 2);
  CHECK(g5.poly == s5.poly);
  CHECK(g5.sign == -1);  // G_4 = (3/2) E_4 reduces to -1 mod 5

  PrimePoly ss29 = ssp::supersingular_poly(FormKind::E, 29, 2);
  ssp::SplittingType st = ssp::splitting_type(ss29);
  CHECK(st.linear_count == 3);
  CHECK(st.quadratic_count == 2);

  PrimePoly ss13 = ssp::supersingular_poly(FormKind::E, 13, 2);
  st = ssp::splitting_type(ss13);
  CHECK(st.linear_count == 1);
  CHECK(st.quadratic_count == 1);

  st = ssp::splitting_type(PrimePoly(5, {1, 1}));
  CHECK(st.linear_count == 1);
  CHECK(st.quadratic_count == 0);

  PrimePoly sq = PrimePoly(5, {1, 1}) * PrimePoly(5, {1, 1});
  CHECK_THROWS_AS(ssp::splitting_type(sq), ssp::error);
  // an irreducible cubic escapes the quadratic extension
  CHECK_THROWS_AS(ssp::splitting_type(PrimePoly(5, {1, 1, 0, 1})), ssp::error);
}

TEST_CASE("factored printing matches the table layout") {
  CHECK(ssp::factored_str(ssp::supersingular_poly(FormKind::E, 19, 2)) ==
        "(x + 1) * (x + 7) * (x + 11) * (x^2 + 9*x + 11)");
  CHECK(ssp::factored_str(ssp::supersingular_poly(FormKind::E, 29, 2)) ==
        "(x + 16) * (x + 23) * (x + 24) * (x^2 + 24*x + 16) * (x^2 + 25*x + 23)");
}

TEST_CASE("modular relation verification") {
  CHECK(ssp::verify_modular_relation(2));
  CHECK(ssp::verify_modular_relation(13));
  ssp::ModularRelation corrupt{2, RationalPoly::parse("(T+255)^3"), RationalPoly::parse("T^2")};
  CHECK(!ssp::verify_relation(corrupt));
}

TEST_CASE("the three weight p-1 forms give one supersingular polynomial") {
  for (auto [p, n] : std::vector<std::pair<long, long>>{{13, 2}, {23, 3}, {29, 25}, {37, 6}}) {
    PrimePoly e = ssp::supersingular_poly(FormKind::E, p, n);
    CHECK(e == ssp::supersingular_poly(FormKind::G, p, n));
    CHECK(e == ssp::supersingular_poly(FormKind::H, p, n));
  }
}

TEST_CASE("squarefreeness of supersingular polynomials") {
  for (long n : {1L, 2L, 7L})
    for (long p : ssp::primes_in(5, 40)) {
      if (n % p == 0) continue;
      PrimePoly ss = ssp::supersingular_poly(FormKind::E, p, n);
      CHECK(poly_gcd(ss, ss.derivative()).degree() == 0);
      ssp::SplittingType st = ssp::splitting_type(ss);
      CHECK(ss.degree() == st.linear_count + 2 * st.quadratic_count);
    }
}
