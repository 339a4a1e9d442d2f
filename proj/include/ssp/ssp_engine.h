#ifndef SSP_SSP_ENGINE_H
#define SSP_SSP_ENGINE_H

#include <string>
#include <vector>

#include "ssp/polynomial.h"
#include "ssp/qseries.h"

namespace ssp {

// p - 1 = 12m + 4*delta + 6*epsilon with delta, epsilon in {0, 1}.
struct WeightDecomposition {
  long m;
  long delta;
  long epsilon;
};

WeightDecomposition decompose_weight(long p);

// Levels with a genus zero X_0(N) and an eta-quotient principal modulus.
const std::vector<long>& supported_levels();
bool is_supported_level(long n);

// Eta-quotient data for the principal modulus T_N and for the weight-12
// form Delta_N vanishing only at the infinite cusp.
const EtaQuotientSpec& hauptmodul_spec(long n);  // n != 1
const EtaQuotientSpec& delta_spec(long n);
long delta_valuation(long n);

// q-expansion of the principal modulus T_N (T_1 = j = E_4^3 / Delta).
QSeries hauptmodul(long n, long precision);
QSeries delta_n(long n, long precision);

// j as a rational function of T_N.
struct ModularRelation {
  long level;
  RationalPoly numerator;
  RationalPoly denominator;
};

// Embedded relation for a supported level.  The first access per level
// verifies the relation against the q-expansions and caches the verdict.
const ModularRelation& modular_relation(long n);

// Checks j * den(T_N) - num(T_N) = O(q^P) with
// P = deg num + deg den + 20; false means some coefficient survives.
bool verify_modular_relation(long n);
bool verify_relation(const ModularRelation& rel);

// The unique polynomial P with P(T_N) = s, by leading-term elimination.
// Throws NonPolynomialResidual if a residual coefficient survives.
RationalPoly to_hauptmodul_poly(const QSeries& s, long n);

enum class FormKind { E, G, H };
FormKind parse_form(const std::string& text);

// Weight p-1 form of the requested kind as a q-expansion.
QSeries weight_form(FormKind form, long p, long precision);

// f_p^(N): the polynomial with f / (E_4^delta E_6^eps Delta_N^m) = f_p^(N)(T_N).
RationalPoly f_poly(FormKind form, long p, long n);
RationalPoly f_poly(FormKind form, long p, long n, const QSeries& form_expansion);

// g_p^(N): radical(num r_N)^delta * radical(num(r_N - 1728))^epsilon.
RationalPoly g_poly(long p, long n);
RationalPoly g_poly_part(long n, bool epsilon_part);  // single radical factor

// Monic supersingular polynomial over F_p; sign is the leading coefficient
// of f*g mod p before normalization (always +-1).
struct SignedPrimePoly {
  PrimePoly poly;
  int sign;
};
SignedPrimePoly supersingular_poly_signed(FormKind form, long p, long n);
PrimePoly supersingular_poly(FormKind form, long p, long n);

struct SplittingType {
  long linear_count;
  long quadratic_count;
};

// Factor degree profile over F_p for a squarefree polynomial whose roots
// lie in F_{p^2}.
SplittingType splitting_type(const PrimePoly& poly);

// Monic factors of degree <= 2, sorted by degree then by coefficient
// sequence from the leading term down.
std::vector<PrimePoly> factor_deg_le2(const PrimePoly& poly);
std::string factored_str(const PrimePoly& poly);

// Embedded golden rows.
struct GPolyFixture {
  long level;
  std::vector<RationalPoly> delta_factors;
  std::vector<RationalPoly> epsilon_factors;
};
const GPolyFixture& g_poly_fixture(long n);

struct SSPolyFixtureRow {
  long p;
  std::vector<PrimePoly> factors;
};
const std::vector<SSPolyFixtureRow>& level2_ss_fixture();

// Genus table for X^p over X = 2+ / 2-, primes 3..47.
struct GenusTableFixture {
  std::vector<long> primes;
  std::vector<long> genus_2plus;
  std::vector<long> genus_2minus;
};
const GenusTableFixture& xp_genus_fixture();

}  // namespace ssp

#endif
