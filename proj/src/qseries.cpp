#include "ssp/qseries.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ssp {

QSeries::QSeries(long valuation, std::vector<Rational> coeffs, long precision)
    : val_(valuation), prec_(precision), c_(std::move(coeffs)) {
  if (prec_ - val_ != static_cast<long>(c_.size()))
    throw error(errc::insufficient_precision,
                "coefficient window does not match [valuation, precision)");
  if (prec_ <= val_)
    throw error(errc::insufficient_precision, "series constructed with empty window");
  normalize();
}

void QSeries::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) lead++;
  if (lead == c_.size()) {
    c_.clear();
    val_ = prec_;
  } else if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + lead);
    val_ += static_cast<long>(lead);
  }
}

QSeries QSeries::zero(long precision) {
  QSeries s;
  s.val_ = precision;
  s.prec_ = precision;
  return s;
}

QSeries QSeries::one(long precision) { return monomial(1, 0, precision); }

QSeries QSeries::monomial(const Rational& c, long exponent, long precision) {
  if (c == 0) return zero(precision);
  if (precision <= exponent)
    throw error(errc::insufficient_precision, "monomial exponent at or above precision");
  std::vector<Rational> v(precision - exponent);
  v[0] = c;
  return QSeries(exponent, std::move(v), precision);
}

Rational QSeries::coeff(long e) const {
  if (e >= prec_)
    throw error(errc::insufficient_precision, "coefficient requested beyond precision");
  if (e < val_) return 0;
  return c_[e - val_];
}

QSeries QSeries::truncated(long new_precision) const {
  if (new_precision > prec_)
    throw error(errc::insufficient_precision, "cannot extend a series by truncation");
  if (is_zero() || new_precision <= val_) return zero(new_precision);
  std::vector<Rational> v(c_.begin(), c_.begin() + (new_precision - val_));
  return QSeries(val_, std::move(v), new_precision);
}

QSeries QSeries::shifted(long dexp) const {
  QSeries s(*this);
  s.val_ += dexp;
  s.prec_ += dexp;
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s(*this);
  for (auto& x : s.c_) x = -x;
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long prec = std::min(a.prec_, b.prec_);
  long val = std::min(a.val_, b.val_);
  if (val >= prec) return QSeries::zero(prec);
  std::vector<Rational> v(prec - val);
  for (long e = val; e < prec; e++) {
    if (e >= a.val_ && e < a.prec_ && !a.is_zero()) v[e - val] += a.c_[e - a.val_];
    if (e >= b.val_ && e < b.prec_ && !b.is_zero()) v[e - val] += b.c_[e - b.val_];
  }
  return QSeries(val, std::move(v), prec);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  long prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
  if (a.is_zero() || b.is_zero()) return QSeries::zero(prec);
  long val = a.val_ + b.val_;
  if (prec <= val)
    throw error(errc::insufficient_precision, "product has no provably correct coefficients");
  long n = prec - val;
  std::vector<Rational> v(n);
  long na = static_cast<long>(a.c_.size());
  long nb = static_cast<long>(b.c_.size());
  for (long i = 0; i < na && i < n; i++) {
    if (a.c_[i] == 0) continue;
    long jmax = std::min(nb, n - i);
    for (long j = 0; j < jmax; j++) {
      if (b.c_[j] == 0) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return QSeries(val, std::move(v), prec);
}

QSeries QSeries::operator*(const Rational& c) const {
  if (c == 0) return zero(prec_);
  QSeries s(*this);
  for (auto& x : s.c_) x *= c;
  return s;
}

QSeries QSeries::inverse() const {
  if (is_zero()) throw error(errc::division_by_zero_series, "inverse of a zero series");
  long w = val_;
  long n = prec_ - val_;  // known coefficients of the unit part
  std::vector<Rational> r(n);
  r[0] = 1 / Rational(c_[0]);
  for (long k = 1; k < n; k++) {
    Rational acc;
    for (long j = 1; j <= k; j++) {
      if (c_[j] == 0) continue;
      acc += c_[j] * r[k - j];
    }
    r[k] = -acc * r[0];
  }
  return QSeries(-w, std::move(r), -w + n);
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

QSeries QSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) {
    if (is_zero())
      throw error(errc::division_by_zero_series, "zero series raised to the 0th power");
    return one(prec_ - val_);
  }
  QSeries acc = *this;
  long bit = 62;
  while (!((e >> bit) & 1)) bit--;
  for (bit--; bit >= 0; bit--) {
    acc = acc * acc;
    if ((e >> bit) & 1) acc = acc * (*this);
  }
  return acc;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (long e = val_; e < prec_; e++) {
    const Rational& c = c_[e - val_];
    if (c == 0) continue;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  os << " + O(q^" << prec_ << ")";
  return os.str();
}

EtaQuotientSpec EtaQuotientSpec::make(std::vector<std::pair<long, long>> factors) {
  std::map<long, long> merged;
  for (auto [n, d] : factors) {
    if (n <= 0) throw error(errc::parse_error, "eta multiplier must be positive");
    merged[n] += d;
  }
  EtaQuotientSpec spec;
  for (auto [n, d] : merged)
    if (d != 0) spec.factors.emplace_back(n, d);
  // a fully cancelling quotient is the constant 1
  if (spec.factors.empty()) spec.factors.emplace_back(1, 0);
  return spec;
}

EtaQuotientSpec EtaQuotientSpec::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw error(errc::parse_error, "empty eta quotient");

  std::vector<std::pair<long, long>> factors;
  size_t i = 0;
  long side = 1;  // flips to -1 after '/'
  bool seen_slash = false;
  auto read_long = [&](const char* what) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
    if (i == start) throw error(errc::parse_error, std::string("expected ") + what + " in eta quotient");
    return std::stol(s.substr(start, i - start));
  };
  while (i < s.size()) {
    long n = read_long("multiplier");
    long d = 1;
    if (i < s.size() && s[i] == '^') {
      i++;
      long sign = 1;
      if (i < s.size() && s[i] == '-') {
        sign = -1;
        i++;
      }
      d = sign * read_long("exponent");
    }
    factors.emplace_back(n, side * d);
    if (i < s.size()) {
      if (s[i] == '*') {
        i++;
      } else if (s[i] == '/') {
        if (seen_slash) throw error(errc::parse_error, "more than one '/' in eta quotient");
        seen_slash = true;
        side = -1;
        i++;
      } else {
        throw error(errc::parse_error, "unexpected character in eta quotient");
      }
      if (i == s.size()) throw error(errc::parse_error, "trailing operator in eta quotient");
    }
  }
  return make(std::move(factors));
}

long EtaQuotientSpec::weight_sum() const {
  long s = 0;
  for (auto [n, d] : factors) s += n * d;
  return s;
}

std::string EtaQuotientSpec::str() const {
  std::ostringstream num, den;
  for (auto [n, d] : factors) {
    std::ostringstream& os = (d > 0) ? num : den;
    if (os.tellp() > 0) os << "*";
    os << n;
    long a = d > 0 ? d : -d;
    if (a != 1) os << "^" << a;
  }
  std::string ns = num.str(), ds = den.str();
  if (ns.empty()) ns = "1^0";
  return ds.empty() ? ns : ns + "/" + ds;
}

namespace {

// prod_{k>=1} (1 - x^(n*k)) to the requested number of terms, by the
// pentagonal number theorem.
QSeries euler_product(long n, long terms) {
  std::vector<Rational> v(terms);
  v[0] = 1;
  for (long j = 1;; j++) {
    long e1 = n * (j * (3 * j - 1) / 2);
    long e2 = n * (j * (3 * j + 1) / 2);
    if (e1 >= terms && e2 >= terms) break;
    long sign = (j % 2 == 0) ? 1 : -1;
    if (e1 < terms) v[e1] += sign;
    if (e2 < terms) v[e2] += sign;
  }
  return QSeries(0, std::move(v), terms);
}

}  // namespace

QSeries eta_quotient(const EtaQuotientSpec& spec, long precision) {
  long s = spec.weight_sum();
  if (s % 24 != 0)
    throw error(errc::non_integral_valuation,
                "sum of multiplier*exponent is " + std::to_string(s) + ", not divisible by 24");
  long v0 = s / 24;
  if (precision <= v0)
    throw error(errc::insufficient_precision,
                "requested precision does not exceed the valuation " + std::to_string(v0));
  long terms = precision - v0;
  QSeries acc = QSeries::one(terms);
  for (auto [n, d] : spec.factors) acc = acc * euler_product(n, terms).pow(d);
  return acc.shifted(v0);
}

Rational bernoulli(long k) {
  if (k < 0) throw error(errc::parse_error, "Bernoulli number of negative index");
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (long m = 1; m <= k; m++) {
    Rational acc;
    Integer binom = 1;  // C(m+1, j), updated incrementally
    for (long j = 0; j < m; j++) {
      acc += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / Rational(binom);  // binom == C(m+1, m) == m+1
  }
  return b[k];
}

Rational binomial(const Rational& s, long n) {
  Rational acc = 1;
  for (long i = 0; i < n; i++) {
    acc *= (s - i);
    acc /= (i + 1);
  }
  return acc;
}

QSeries eisenstein(long k, long precision) {
  if (k < 4 || k % 2 != 0)
    throw error(errc::parse_error, "Eisenstein series defined for even k >= 4");
  if (precision < 1)
    throw error(errc::insufficient_precision, "Eisenstein series needs precision >= 1");
  std::vector<Rational> v(precision);
  v[0] = 1;
  if (precision > 1) {
    // sigma_{k-1} by sieving over divisors
    std::vector<Integer> sigma(precision);
    Integer dp;
    for (long d = 1; d < precision; d++) {
      mpz_ui_pow_ui(dp.get_mpz_t(), d, k - 1);
      for (long m = d; m < precision; m += d) sigma[m] += dp;
    }
    Rational c = Rational(-2 * k) / bernoulli(k);
    for (long n = 1; n < precision; n++) v[n] = c * Rational(sigma[n]);
  }
  return QSeries(0, std::move(v), precision);
}

QSeries kz_series(KZKind kind, long k, long precision) {
  if (k % 2 != 0) throw error(errc::parse_error, "series defined for even k");
  if (precision < 1) throw error(errc::insufficient_precision, "precision must be >= 1");
  Rational s = (kind == KZKind::G) ? Rational(-1, 2) : Rational(k) / 2;

  std::vector<std::pair<long, long>> terms;  // (a, b) with 4a + 6b = k
  for (long a = 0; 4 * a <= k; a++)
    if ((k - 4 * a) % 6 == 0) terms.emplace_back(a, (k - 4 * a) / 6);
  if (terms.empty()) return QSeries::zero(precision);

  long amax = 0, bmax = 0;
  for (auto [a, b] : terms) {
    amax = std::max(amax, a);
    bmax = std::max(bmax, b);
  }
  std::vector<QSeries> e4p, e6p;
  e4p.reserve(amax + 1);
  e6p.reserve(bmax + 1);
  e4p.push_back(QSeries::one(precision));
  e6p.push_back(QSeries::one(precision));
  if (amax > 0) {
    QSeries e4 = eisenstein(4, precision);
    for (long a = 1; a <= amax; a++) e4p.push_back(e4p.back() * e4);
  }
  if (bmax > 0) {
    QSeries e6 = eisenstein(6, precision);
    for (long b = 1; b <= bmax; b++) e6p.push_back(e6p.back() * e6);
  }

  QSeries acc = QSeries::zero(precision);
  for (auto [a, b] : terms) {
    Rational c = binomial(s, a + b) * binomial(Rational(a + b), a);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 3, a);
    c *= Rational((a % 2 == 0) ? pw : -pw);
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, b);
    c *= Rational(pw);
    if (c == 0) continue;
    acc = acc + (e4p[a] * e6p[b]) * c;
  }
  return acc;
}

}  // namespace ssp
