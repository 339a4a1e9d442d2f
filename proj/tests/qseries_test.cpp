#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ssp/qseries.h"

using ssp::EtaQuotientSpec;
using ssp::QSeries;
using ssp::Rational;

namespace {

// Independent brute force: dense polynomial arithmetic mod q^terms, no
// QSeries involved.  Enough to pin down the eta and Eisenstein examples.
using Dense = std::vector<Rational>;

Dense dense_mul(const Dense& a, const Dense& b, long terms) {
  Dense r(terms);
  for (long i = 0; i < static_cast<long>(a.size()); i++)
    for (long j = 0; j < static_cast<long>(b.size()) && i + j < terms; j++)
      r[i + j] += a[i] * b[j];
  r.resize(terms);
  return r;
}

Dense dense_pow(Dense a, long e, long terms) {
  Dense r(terms);
  r[0] = 1;
  for (long i = 0; i < e; i++) r = dense_mul(r, a, terms);
  return r;
}

// prod_{k<terms} (1 - q^k)^e by repeated multiplication
Dense dense_euler_pow(long e, long terms) {
  Dense acc(terms);
  acc[0] = 1;
  for (long k = 1; k < terms; k++) {
    Dense f(terms);
    f[0] = 1;
    if (k < terms) f[k] = -1;
    for (long rep = 0; rep < e; rep++) acc = dense_mul(acc, f, terms);
  }
  return acc;
}

void check_prefix(const QSeries& s, long from, const std::vector<Rational>& expect) {
  for (size_t i = 0; i < expect.size(); i++) {
    CAPTURE(i);
    CHECK(s.coeff(from + static_cast<long>(i)) == expect[i]);
  }
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(ssp::bernoulli(0) == 1);
  CHECK(ssp::bernoulli(4) == Rational(-1, 30));
  CHECK(ssp::bernoulli(12) == Rational(-691, 2730));
  CHECK(ssp::bernoulli(1) == Rational(-1, 2));
  CHECK(ssp::bernoulli(6) == Rational(1, 42));
}

TEST_CASE("eta quotient: discriminant form") {
  // oracle: q * prod (1-q^k)^24 truncated at q^5
  Dense oracle = dense_euler_pow(24, 4);
  CHECK(oracle[0] == 1);
  CHECK(oracle[1] == -24);
  CHECK(oracle[2] == 252);
  CHECK(oracle[3] == -1472);

  QSeries delta = ssp::eta_quotient(EtaQuotientSpec::parse("1^24"), 5);
  CHECK(delta.valuation() == 1);
  CHECK(delta.precision() == 5);
  check_prefix(delta, 1, {1, -24, 252, -1472});
}

TEST_CASE("eta quotient: level 2 principal modulus prefix") {
  // oracle: divide the two Euler products directly
  long terms = 4;
  Dense num = dense_euler_pow(24, terms);
  Dense den(terms);
  {
    Dense e2(terms);  // prod (1 - q^(2k))^24
    e2[0] = 1;
    for (long k = 2; k < terms; k += 2) {
      Dense f(terms);
      f[0] = 1;
      f[k] = -1;
      for (int rep = 0; rep < 24; rep++) e2 = dense_mul(e2, f, terms);
    }
    den = e2;
  }
  Dense inv(terms);
  inv[0] = 1;
  for (long k = 1; k < terms; k++) {
    Rational acc;
    for (long j = 1; j <= k; j++) acc += den[j] * inv[k - j];
    inv[k] = -acc;
  }
  Dense quot = dense_mul(num, inv, terms);
  CHECK(quot[0] == 1);
  CHECK(quot[1] == -24);
  CHECK(quot[2] == 276);

  QSeries t2 = ssp::eta_quotient(EtaQuotientSpec::parse("1^24/2^24"), 3);
  CHECK(t2.valuation() == -1);
  check_prefix(t2, -1, {1, -24, 276, quot[3]});
}

TEST_CASE("eta quotient: identity quotient is the constant 1") {
  QSeries one = ssp::eta_quotient(EtaQuotientSpec::parse("1^1/1^1"), 4);
  CHECK(one.coeff(0) == 1);
  for (long e = 1; e < 4; e++) CHECK(one.coeff(e) == 0);
  CHECK(one.precision() == 4);
}

TEST_CASE("eta quotient edge cases") {
  // fractional q-power
  CHECK_THROWS_AS(ssp::eta_quotient(EtaQuotientSpec::parse("1^1"), 5), ssp::error);
  // precision at or below the valuation
  CHECK_THROWS_AS(ssp::eta_quotient(EtaQuotientSpec::parse("1^24"), 1), ssp::error);
  CHECK_THROWS_AS(EtaQuotientSpec::parse(""), ssp::error);
  CHECK_THROWS_AS(EtaQuotientSpec::parse("1^24/2^24/3^24"), ssp::error);
}

TEST_CASE("eisenstein series") {
  QSeries e4 = ssp::eisenstein(4, 3);
  check_prefix(e4, 0, {1, 240, 2160});
  QSeries e6 = ssp::eisenstein(6, 2);
  check_prefix(e6, 0, {1, -504});
  QSeries e4c = ssp::eisenstein(4, 1);
  CHECK(e4c.coeff(0) == 1);
  CHECK(e4c.precision() == 1);
  // non-integral coefficients appear at k = 12: -2k/B_k = 65520/691
  QSeries e12 = ssp::eisenstein(12, 2);
  CHECK(e12.coeff(1) == Rational(65520, 691));
}

TEST_CASE("kz series: G") {
  QSeries g4 = ssp::kz_series(ssp::KZKind::G, 4, 3);
  CHECK(g4.coeff(0) == Rational(3, 2));
  CHECK(g4.coeff(1) == 360);
  QSeries g2 = ssp::kz_series(ssp::KZKind::G, 2, 5);
  CHECK(g2.is_zero());
}

TEST_CASE("kz series: H constant term against the bivariate expansion") {
  // oracle: expand (1 - 3 E_4 X^4 + 2 E_6 X^6)^(k/2) as a polynomial in X
  // with Dense q-coefficients, then read off the X^k slice.
  for (long k : {12L, 24L}) {
    long terms = 3;
    std::vector<Dense> poly(k + 1, Dense(terms));  // index = X-power
    poly[0][0] = 1;
    Dense e4(terms), e6(terms);
    {
      QSeries s4 = ssp::eisenstein(4, terms), s6 = ssp::eisenstein(6, terms);
      for (long i = 0; i < terms; i++) {
        e4[i] = s4.coeff(i);
        e6[i] = s6.coeff(i);
      }
    }
    for (long rep = 0; rep < k / 2; rep++) {
      std::vector<Dense> next(k + 1, Dense(terms));
      for (long xa = 0; xa <= k; xa++) {
        bool zero = true;
        for (const auto& c : poly[xa])
          if (c != 0) zero = false;
        if (zero) continue;
        // multiply by 1 - 3 E_4 X^4 + 2 E_6 X^6
        for (long i = 0; i < terms; i++) {
          if (poly[xa][i] == 0) continue;
          next[xa][i] += poly[xa][i];
        }
        if (xa + 4 <= k) {
          Dense t = dense_mul(poly[xa], e4, terms);
          for (long i = 0; i < terms; i++) next[xa + 4][i] -= 3 * t[i];
        }
        if (xa + 6 <= k) {
          Dense t = dense_mul(poly[xa], e6, terms);
          for (long i = 0; i < terms; i++) next[xa + 6][i] += 2 * t[i];
        }
      }
      poly = std::move(next);
    }
    QSeries h = ssp::kz_series(ssp::KZKind::H, k, terms);
    for (long i = 0; i < terms; i++) {
      CAPTURE(k);
      CAPTURE(i);
      CHECK(h.coeff(i) == poly[k][i]);
    }
  }
}

TEST_CASE("series arithmetic basics") {
  QSeries t2 = ssp::eta_quotient(EtaQuotientSpec::parse("1^24/2^24"), 6);
  QSeries prod = t2 * t2.inverse();
  CHECK(prod.coeff(0) == 1);
  for (long e = 1; e < prod.precision(); e++) CHECK(prod.coeff(e) == 0);

  QSeries delta = ssp::eta_quotient(EtaQuotientSpec::parse("1^24"), 5);
  QSeries q = delta / delta;
  CHECK(q.coeff(0) == 1);
  CHECK(q.precision() == 4);  // inverting a series of valuation 1 costs two orders
  for (long e = 1; e < q.precision(); e++) CHECK(q.coeff(e) == 0);
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta") {
  long prec = 6;
  QSeries e4 = ssp::eisenstein(4, prec);
  QSeries e6 = ssp::eisenstein(6, prec);
  QSeries delta = ssp::eta_quotient(EtaQuotientSpec::parse("1^24"), prec);
  QSeries diff = e4 * e4 * e4 - e6 * e6 - delta * Rational(1728);
  CHECK(diff.is_zero());
}

TEST_CASE("truncation consistency across precisions") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 8; iter++) {
    std::vector<std::pair<long, long>> factors;
    long sum = 0;
    for (int i = 0; i < 3; i++) {
      long n = 2 + static_cast<long>(rng() % 3);
      long d = static_cast<long>(rng() % 7) - 3;
      if (d == 0) d = 1;
      factors.emplace_back(n, d);
      sum += n * d;
    }
    long fix = ((-sum) % 24 + 24) % 24;
    if (fix != 0) factors.emplace_back(1, fix);  // make 24 | sum n*d
    sum += fix;
    EtaQuotientSpec spec = EtaQuotientSpec::make(factors);
    long p1 = sum / 24 + 3, p2 = p1 + 5;
    QSeries a = ssp::eta_quotient(spec, p1);
    QSeries b = ssp::eta_quotient(spec, p2).truncated(p1);
    for (long e = std::min(a.valuation(), b.valuation()); e < p1; e++)
      CHECK(a.coeff(e) == b.coeff(e));
  }
}

TEST_CASE("eta product of specs equals eta of merged spec") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 6; iter++) {
    auto random_spec = [&]() {
      std::vector<std::pair<long, long>> factors;
      long sum = 0;
      for (int i = 0; i < 2; i++) {
        long n = 1 + static_cast<long>(rng() % 3);
        long d = static_cast<long>(rng() % 5) - 2;
        if (d == 0) d = 2;
        factors.emplace_back(n, d);
        sum += n * d;
      }
      long fix = ((-sum) % 24 + 24) % 24;
      if (fix != 0) factors.emplace_back(1, fix);
      return EtaQuotientSpec::make(factors);
    };
    EtaQuotientSpec a = random_spec(), b = random_spec();
    std::vector<std::pair<long, long>> merged = a.factors;
    merged.insert(merged.end(), b.factors.begin(), b.factors.end());
    EtaQuotientSpec m = EtaQuotientSpec::make(merged);
    long prec = (a.weight_sum() + b.weight_sum()) / 24 + 6;
    QSeries lhs = ssp::eta_quotient(a, prec) * ssp::eta_quotient(b, prec);
    QSeries rhs = ssp::eta_quotient(m, std::min(prec, lhs.precision()));
    for (long e = rhs.valuation(); e < std::min(lhs.precision(), rhs.precision()); e++)
      CHECK(lhs.coeff(e) == rhs.coeff(e));
  }
}

TEST_CASE("divide then multiply round-trips") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 6; iter++) {
    long prec = 8;
    std::vector<Rational> ac(prec + 2), bc(prec + 2);
    for (auto& c : ac) c = static_cast<long>(rng() % 11) - 5;
    for (auto& c : bc) c = static_cast<long>(rng() % 11) - 5;
    bc[0] = 1 + static_cast<long>(rng() % 5);  // keep the divisor a unit
    QSeries a(-2, ac, prec);
    QSeries b(0, bc, prec + 2);
    QSeries back = (a / b) * b;
    for (long e = back.valuation(); e < back.precision(); e++) CHECK(back.coeff(e) == a.coeff(e));
  }
}

TEST_CASE("products agree with dense convolution on the trusted window") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 40; iter++) {
    long va = static_cast<long>(rng() % 7) - 3;
    long vb = static_cast<long>(rng() % 7) - 3;
    long na = 1 + static_cast<long>(rng() % 6);
    long nb = 1 + static_cast<long>(rng() % 6);
    std::vector<Rational> ca(na), cb(nb);
    for (auto& c : ca) c = static_cast<long>(rng() % 9) - 4;
    for (auto& c : cb) c = static_cast<long>(rng() % 9) - 4;
    ca[0] = 1 + static_cast<long>(rng() % 3);
    cb[0] = 1 + static_cast<long>(rng() % 3);
    QSeries a(va, ca, va + na), b(vb, cb, vb + nb);
    QSeries prod = a * b;
    CHECK(prod.precision() == std::min(a.precision() + vb, b.precision() + va));
    for (long e = prod.valuation(); e < prod.precision(); e++) {
      Rational expect;
      for (long i = 0; i < na; i++) {
        long j = e - (va + i) - vb;
        if (j >= 0 && j < nb) expect += ca[i] * cb[j];
      }
      CHECK(prod.coeff(e) == expect);
    }
    // a * b / b recovers a on the provable window
    QSeries back = prod / b;
    for (long e = back.valuation(); e < back.precision(); e++) CHECK(back.coeff(e) == a.coeff(e));
  }
}

TEST_CASE("precision bookkeeping refuses to invent coefficients") {
  QSeries s = ssp::eisenstein(4, 3);
  CHECK_THROWS_AS(s.coeff(3), ssp::error);
  CHECK_THROWS_AS(s.truncated(4), ssp::error);
  QSeries z = QSeries::zero(5);
  CHECK(z.is_zero());
  CHECK((z * s).is_zero());
  CHECK_THROWS_AS(z.inverse(), ssp::error);
}
