#include "ssp/ssp_engine.h"

#include <algorithm>
#include <cctype>

#include "ssp/modular_curves.h"

namespace ssp {

WeightDecomposition decompose_weight(long p) {
  if (p < 5 || !is_prime(p))
    throw error(errc::parse_error, "weight decomposition needs a prime p >= 5");
  WeightDecomposition w;
  w.delta = (p % 3 == 2) ? 1 : 0;
  w.epsilon = (p % 4 == 3) ? 1 : 0;
  long rest = p - 1 - 4 * w.delta - 6 * w.epsilon;
  w.m = rest / 12;
  if (rest % 12 != 0 || w.m < 0)
    throw error(errc::parse_error, "p - 1 = 12m + 4d + 6e failed for p = " + std::to_string(p));
  return w;
}

FormKind parse_form(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "e") return FormKind::E;
  if (t == "g") return FormKind::G;
  if (t == "h") return FormKind::H;
  throw error(errc::parse_error, "unknown form kind '" + text + "' (expected e, g or h)");
}

QSeries hauptmodul(long n, long precision) {
  if (!is_supported_level(n))
    throw error(errc::unsupported_level, "no principal modulus for level " + std::to_string(n));
  if (n == 1) {
    QSeries e4 = eisenstein(4, precision + 2);
    QSeries delta = eta_quotient(delta_spec(1), precision + 2);
    return (e4 * e4 * e4) / delta;
  }
  QSeries t = eta_quotient(hauptmodul_spec(n), precision);
  if (t.valuation() != -1)
    throw error(errc::fixture_mismatch, "principal modulus row has valuation != -1");
  return t;
}

QSeries delta_n(long n, long precision) {
  if (!is_supported_level(n))
    throw error(errc::unsupported_level, "no Delta_N for level " + std::to_string(n));
  QSeries d = eta_quotient(delta_spec(n), precision);
  if (d.is_zero() || d.valuation() != delta_valuation(n) || d.valuation() <= 0)
    throw error(errc::fixture_mismatch, "Delta_N row has the wrong valuation");
  return d;
}

QSeries weight_form(FormKind form, long p, long precision) {
  switch (form) {
    case FormKind::E: return eisenstein(p - 1, precision);
    case FormKind::G: return kz_series(KZKind::G, p - 1, precision);
    case FormKind::H: return kz_series(KZKind::H, p - 1, precision);
  }
  throw error(errc::parse_error, "unreachable form kind");
}

RationalPoly to_hauptmodul_poly(const QSeries& s, long n) {
  if (!is_supported_level(n))
    throw error(errc::unsupported_level, "level " + std::to_string(n) + " has no principal modulus");
  if (s.is_zero()) return RationalPoly();
  if (s.precision() < 2)
    throw error(errc::insufficient_precision,
                "need coefficients past the constant term to certify the residual");
  long d = std::max(0L, -s.valuation());
  std::vector<Rational> coeffs(d + 1);
  QSeries r = s;
  if (d > 0) {
    QSeries t = hauptmodul(n, s.precision() + d - 1);
    std::vector<QSeries> tpow;
    tpow.reserve(d);
    tpow.push_back(t);
    for (long k = 2; k <= d; k++) tpow.push_back(tpow.back() * t);
    for (long k = d; k >= 1; k--) {
      Rational c = r.coeff(-k);
      if (c == 0) continue;
      coeffs[k] = c;
      r = r - tpow[k - 1] * c;
    }
  }
  coeffs[0] = r.coeff(0);
  r = r - QSeries::monomial(coeffs[0], 0, r.precision());
  if (!r.is_zero())
    throw error(errc::non_polynomial_residual,
                "series is not a polynomial in the principal modulus: residual " + r.str());
  return RationalPoly(std::move(coeffs));
}

namespace {

RationalPoly f_poly_attempt(FormKind form, long p, long n, const QSeries* supplied, long guard) {
  WeightDecomposition w = decompose_weight(p);
  long d = w.m * delta_valuation(n);
  long prec_s = guard + 1;
  long prec_f = prec_s + d;

  QSeries f = supplied ? supplied->truncated(prec_f) : weight_form(form, p, prec_f);

  QSeries div = QSeries::one(prec_s + 2 * d + 2);
  if (w.delta) div = div * eisenstein(4, prec_s + 2 * d + 2);
  if (w.epsilon) div = div * eisenstein(6, prec_s + 2 * d + 2);
  if (w.m > 0) div = div * delta_n(n, prec_s + 2 * d + 2).pow(w.m);

  QSeries s = f / div;
  RationalPoly poly = to_hauptmodul_poly(s, n);
  for (long i = 0; i <= poly.degree(); i++)
    if (mpz_fdiv_ui(poly.coeff(i).get_den().get_mpz_t(), p) == 0)
      throw error(errc::p_divides_denominator,
                  "coefficient of x^" + std::to_string(i) + " has denominator divisible by " +
                      std::to_string(p));
  return poly;
}

}  // namespace

RationalPoly f_poly(FormKind form, long p, long n, const QSeries& form_expansion) {
  if (!is_supported_level(n)) throw error(errc::unsupported_level, std::to_string(n));
  if (p < 5 || !is_prime(p)) throw error(errc::parse_error, "f_poly needs a prime p >= 5");
  if (n % p == 0)
    throw error(errc::prime_divides_level, std::to_string(p) + " divides " + std::to_string(n));
  try {
    return f_poly_attempt(form, p, n, &form_expansion, 10);
  } catch (const error& e) {
    if (e.code() != errc::non_polynomial_residual) throw;
    return f_poly_attempt(form, p, n, &form_expansion, 20);
  }
}

RationalPoly f_poly(FormKind form, long p, long n) {
  if (!is_supported_level(n)) throw error(errc::unsupported_level, std::to_string(n));
  if (p < 5 || !is_prime(p)) throw error(errc::parse_error, "f_poly needs a prime p >= 5");
  if (n % p == 0)
    throw error(errc::prime_divides_level, std::to_string(p) + " divides " + std::to_string(n));
  try {
    return f_poly_attempt(form, p, n, nullptr, 10);
  } catch (const error& e) {
    if (e.code() != errc::non_polynomial_residual) throw;
    return f_poly_attempt(form, p, n, nullptr, 20);
  }
}

RationalPoly g_poly_part(long n, bool epsilon_part) {
  const ModularRelation& rel = modular_relation(n);
  if (!epsilon_part) return radical(rel.numerator);
  return radical(rel.numerator - rel.denominator * Rational(1728));
}

RationalPoly g_poly(long p, long n) {
  if (!is_supported_level(n)) throw error(errc::unsupported_level, std::to_string(n));
  if (n % p == 0)
    throw error(errc::prime_divides_level, std::to_string(p) + " divides " + std::to_string(n));
  WeightDecomposition w = decompose_weight(p);
  RationalPoly g = RationalPoly::constant(1);
  if (w.delta) g = g * g_poly_part(n, false);
  if (w.epsilon) g = g * g_poly_part(n, true);
  return g;
}

SignedPrimePoly supersingular_poly_signed(FormKind form, long p, long n) {
  RationalPoly fg = f_poly(form, p, n) * g_poly(p, n);
  PrimePoly red = reduce_mod(fg, p);
  if (red.degree() != fg.degree() || (red.lead() != 1 && red.lead() != p - 1))
    throw error(errc::leading_coefficient_not_unit,
                "f*g mod " + std::to_string(p) + " has leading coefficient " +
                    std::to_string(red.degree() == fg.degree() ? red.lead() : 0) +
                    ", expected +-1");
  int sign = (red.lead() == 1) ? 1 : -1;
  return {red.monic(), sign};
}

PrimePoly supersingular_poly(FormKind form, long p, long n) {
  return supersingular_poly_signed(form, p, n).poly;
}

SplittingType splitting_type(const PrimePoly& poly) {
  long d = poly.degree();
  if (d <= 0) return {0, 0};
  long p = poly.modulus();
  if (poly_gcd(poly, poly.derivative()).degree() != 0)
    throw error(errc::not_squarefree, "polynomial shares a root with its derivative");

  PrimePoly xp = x_pow_mod(Integer(p), poly);
  PrimePoly g1 = poly_gcd(xp - PrimePoly::x(p), poly);
  long linear = g1.degree();

  PrimePoly rest = poly.monic().divexact(g1);
  if (rest.degree() > 0) {
    PrimePoly xp2 = x_pow_mod(Integer(p) * Integer(p), rest);
    if (!((xp2 - PrimePoly::x(p)) % rest).is_zero())
      throw error(errc::irreducible_factor_degree_exceeds_two,
                  "roots escape the quadratic extension");
  }
  if ((d - linear) % 2 != 0)
    throw error(errc::irreducible_factor_degree_exceeds_two,
                "non-linear part has odd degree " + std::to_string(d - linear));
  return {linear, (d - linear) / 2};
}

std::vector<PrimePoly> factor_deg_le2(const PrimePoly& poly) {
  long p = poly.modulus();
  PrimePoly work = poly.monic();
  std::vector<PrimePoly> factors;
  for (long r = 0; r < p && work.degree() > 0; r++) {
    PrimePoly lin(p, {(p - r) % p, 1});  // x - r
    while (work.degree() > 0 && work.eval(r) == 0) {
      work = work.divexact(lin);
      factors.push_back(lin);
    }
  }
  for (long b = 0; b < p && work.degree() > 1; b++) {
    for (long c = 0; c < p && work.degree() > 1; c++) {
      PrimePoly quad(p, {c, b, 1});
      PrimePoly q = PrimePoly::zero(p), r = PrimePoly::zero(p);
      PrimePoly::divrem(work, quad, q, r);
      while (r.is_zero()) {
        factors.push_back(quad);
        work = q;
        if (work.degree() < 2) break;
        PrimePoly::divrem(work, quad, q, r);
      }
    }
  }
  if (work.degree() != 0)
    throw error(errc::irreducible_factor_degree_exceeds_two,
                "factor of degree > 2 remains: " + work.str());
  std::sort(factors.begin(), factors.end(), [](const PrimePoly& a, const PrimePoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; i--)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  return factors;
}

std::string factored_str(const PrimePoly& poly) {
  std::vector<PrimePoly> factors = factor_deg_le2(poly);
  if (factors.empty()) return poly.str();
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " * ";
    out += "(" + f.str() + ")";
  }
  return out;
}

namespace {

// P(T) for a series T, by Horner
QSeries eval_poly_at_series(const RationalPoly& poly, const QSeries& t) {
  if (poly.is_zero()) return QSeries::zero(t.precision());
  long big = t.precision() + std::abs(t.valuation()) * (poly.degree() + 1) + 2;
  QSeries acc = QSeries::monomial(poly.coeff(poly.degree()), 0, big);
  for (long i = poly.degree() - 1; i >= 0; i--) {
    acc = acc * t;
    if (poly.coeff(i) != 0 && acc.precision() > 0)
      acc = acc + QSeries::monomial(poly.coeff(i), 0, acc.precision());
  }
  return acc;
}

}  // namespace

bool verify_relation(const ModularRelation& rel) {
  long dn = rel.numerator.degree();
  long dd = rel.denominator.degree();
  long target = dn + dd + 20;
  QSeries t = hauptmodul(rel.level, target + dn + 2);
  QSeries j = (rel.level == 1) ? t : hauptmodul(1, target + dd + 2);
  QSeries lhs = j * eval_poly_at_series(rel.denominator, t);
  QSeries rhs = eval_poly_at_series(rel.numerator, t);
  QSeries diff = lhs - rhs;
  if (diff.precision() < target)
    throw error(errc::insufficient_precision, "relation check lost too much precision");
  return diff.truncated(target).is_zero();
}

bool verify_modular_relation(long n) {
  if (!is_supported_level(n)) throw error(errc::unsupported_level, std::to_string(n));
  return verify_relation(modular_relation(n));
}

}  // namespace ssp
