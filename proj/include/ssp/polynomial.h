#ifndef SSP_POLYNOMIAL_H
#define SSP_POLYNOMIAL_H

#include <string>
#include <string_view>
#include <vector>

#include "ssp/qseries.h"

namespace ssp {

// Dense univariate polynomial over Q, lowest degree first.  The zero
// polynomial has an empty coefficient vector and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);
  static RationalPoly x();

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(long i) const { return (i < 0 || i > degree()) ? Rational(0) : c_[i]; }
  const Rational& lead() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly operator*(const Rational& c) const;
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  // Euclidean division; the divisor must be nonzero.
  static void divrem(const RationalPoly& a, const RationalPoly& b, RationalPoly& q,
                     RationalPoly& r);
  RationalPoly divexact(const RationalPoly& b) const;

  RationalPoly derivative() const;
  RationalPoly monic() const;
  RationalPoly pow(long e) const;
  Rational eval(const Rational& x) const;

  // Parse a product of factors like "(x+256)^3 (x-512) x^2" or a bare
  // polynomial "x^2 + 8x + 1"; 'T' is accepted as the variable too.
  static RationalPoly parse(std::string_view text);

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// gcd by a primitive pseudo-remainder sequence, returned monic.
RationalPoly poly_gcd(const RationalPoly& a, const RationalPoly& b);

// Product of the distinct irreducible factors: p / gcd(p, p'), monic.
RationalPoly radical(const RationalPoly& p);

// Dense univariate polynomial over F_p, coefficients in [0, p).
class PrimePoly {
 public:
  PrimePoly(long p, std::vector<long> coeffs);
  static PrimePoly zero(long p) { return PrimePoly(p, {}); }
  static PrimePoly constant(long p, long c) { return PrimePoly(p, {c}); }
  static PrimePoly x(long p) { return PrimePoly(p, {0, 1}); }

  long modulus() const { return p_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  long coeff(long i) const { return (i < 0 || i > degree()) ? 0 : c_[i]; }
  long lead() const;
  const std::vector<long>& coeffs() const { return c_; }

  friend PrimePoly operator+(const PrimePoly& a, const PrimePoly& b);
  friend PrimePoly operator-(const PrimePoly& a, const PrimePoly& b);
  friend PrimePoly operator*(const PrimePoly& a, const PrimePoly& b);
  bool operator==(const PrimePoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const PrimePoly& o) const { return !(*this == o); }

  static void divrem(const PrimePoly& a, const PrimePoly& b, PrimePoly& q, PrimePoly& r);
  PrimePoly operator%(const PrimePoly& b) const;
  PrimePoly divexact(const PrimePoly& b) const;

  PrimePoly derivative() const;
  PrimePoly monic() const;
  long eval(long x) const;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  long p_;
  std::vector<long> c_;
};

PrimePoly poly_gcd(const PrimePoly& a, const PrimePoly& b);

// x^e mod f by repeated squaring; e may be large (e.g. p or p^2).
PrimePoly x_pow_mod(const Integer& e, const PrimePoly& f);

// Reduce a rational polynomial mod p; every coefficient denominator must be
// a unit mod p.
PrimePoly reduce_mod(const RationalPoly& a, long p);

long mod_inverse(long a, long p);

}  // namespace ssp

#endif
