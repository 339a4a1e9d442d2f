#include "ssp/error.h"

namespace ssp {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_integral_valuation: return "NonIntegralValuation";
    case errc::insufficient_precision: return "InsufficientPrecision";
    case errc::division_by_zero_series: return "DivisionByZeroSeries";
    case errc::parse_error: return "ParseError";
    case errc::not_exact_divisor: return "NotExactDivisor";
    case errc::non_integral_genus: return "NonIntegralGenus";
    case errc::prime_divides_level: return "PrimeDividesLevel";
    case errc::unsupported_level: return "UnsupportedLevel";
    case errc::non_polynomial_residual: return "NonPolynomialResidual";
    case errc::p_divides_denominator: return "PDividesDenominator";
    case errc::leading_coefficient_not_unit: return "LeadingCoefficientNotUnit";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::irreducible_factor_degree_exceeds_two: return "IrreducibleFactorDegreeExceedsTwo";
    case errc::invalid_discriminant: return "InvalidDiscriminant";
    case errc::method_disagreement: return "MethodDisagreement";
    case errc::fixture_mismatch: return "FixtureMismatch";
    case errc::denominator_vanishes: return "DenominatorVanishes";
    case errc::field_too_large: return "FieldTooLarge";
  }
  return "UnknownError";
}

bool is_usage_error(errc c) {
  switch (c) {
    case errc::parse_error:
    case errc::not_exact_divisor:
    case errc::prime_divides_level:
    case errc::unsupported_level:
    case errc::invalid_discriminant:
    case errc::non_integral_valuation:
    case errc::insufficient_precision:
    case errc::division_by_zero_series:
    case errc::field_too_large:
      return true;
    default:
      return false;
  }
}

}  // namespace ssp
