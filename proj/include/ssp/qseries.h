#ifndef SSP_QSERIES_H
#define SSP_QSERIES_H

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssp/error.h"

namespace ssp {

using Rational = mpq_class;
using Integer = mpz_class;

// Truncated Laurent series in q with exact rational coefficients.
//
// A nonzero series stores exactly precision() - valuation() coefficients and
// the one at valuation() is nonzero.  A series that is zero to its precision
// stores nothing and has valuation() == precision().  Precision bookkeeping
// is pessimistic: operations report the largest provably correct precision
// and refuse to fabricate coefficients beyond it.
class QSeries {
 public:
  QSeries(long valuation, std::vector<Rational> coeffs, long precision);

  static QSeries zero(long precision);
  static QSeries one(long precision);
  static QSeries monomial(const Rational& c, long exponent, long precision);

  long valuation() const { return val_; }
  long precision() const { return prec_; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of q^e; zero below the valuation, error at or above the
  // precision.
  Rational coeff(long e) const;

  QSeries truncated(long new_precision) const;
  QSeries shifted(long dexp) const;  // multiply by q^dexp

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  QSeries operator*(const Rational& c) const;

  QSeries inverse() const;
  QSeries pow(long e) const;

  std::string str() const;

 private:
  QSeries() : val_(0), prec_(0) {}
  void normalize();

  long val_;
  long prec_;
  std::vector<Rational> c_;  // c_[i] is the coefficient of q^(val_ + i)
};

// Finite product of rescaled Dedekind eta functions, eta(n*tau)^d.
struct EtaQuotientSpec {
  std::vector<std::pair<long, long>> factors;  // (multiplier, exponent), multipliers increasing

  // Text syntax: factors n^d separated by '*', optionally a single '/'
  // separating numerator and denominator, e.g. "1^24/2^24" or "2^8*3^4/1^4*6^8".
  static EtaQuotientSpec parse(std::string_view text);
  static EtaQuotientSpec make(std::vector<std::pair<long, long>> factors);

  long weight_sum() const;  // sum of n*d over all factors
  std::string str() const;
};

// q-expansion of prod eta(n*tau)^d.  The q-valuation is (sum n*d)/24, which
// must be an integer.
QSeries eta_quotient(const EtaQuotientSpec& spec, long precision);

// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QSeries eisenstein(long k, long precision);

enum class KZKind { G, H };

// Coefficient of X^k in (1 - 3 E_4 X^4 + 2 E_6 X^6)^s with s = -1/2 (G) or
// s = k/2 (H), as a finite sum over 4a + 6b = k.
QSeries kz_series(KZKind kind, long k, long precision);

// k-th Bernoulli number by the standard recurrence.
Rational bernoulli(long k);

// Generalized binomial coefficient C(s, n) = s(s-1)...(s-n+1)/n!.
Rational binomial(const Rational& s, long n);

}  // namespace ssp

#endif
