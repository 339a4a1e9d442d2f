#ifndef SSP_ERROR_H
#define SSP_ERROR_H

#include <stdexcept>
#include <string>

namespace ssp {

enum class errc {
  non_integral_valuation,
  insufficient_precision,
  division_by_zero_series,
  parse_error,
  not_exact_divisor,
  non_integral_genus,
  prime_divides_level,
  unsupported_level,
  non_polynomial_residual,
  p_divides_denominator,
  leading_coefficient_not_unit,
  not_squarefree,
  irreducible_factor_degree_exceeds_two,
  invalid_discriminant,
  method_disagreement,
  fixture_mismatch,
  denominator_vanishes,
  field_too_large,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Bad arguments vs. broken internal invariants; the CLI maps these to
// different exit codes.
bool is_usage_error(errc c);

}  // namespace ssp

#endif
