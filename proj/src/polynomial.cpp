#include "ssp/polynomial.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ssp {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::x() { return RationalPoly({0, 1}); }

void RationalPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& RationalPoly::lead() const {
  static const Rational zero(0);
  return c_.empty() ? zero : c_.back();
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); i++) {
    if (i < a.c_.size()) v[i] += a.c_[i];
    if (i < b.c_.size()) v[i] += b.c_[i];
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); i++) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); j++) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const Rational& c) const {
  RationalPoly r(*this);
  for (auto& x : r.c_) x *= c;
  r.normalize();
  return r;
}

void RationalPoly::divrem(const RationalPoly& a, const RationalPoly& b, RationalPoly& q,
                          RationalPoly& r) {
  if (b.is_zero()) throw error(errc::division_by_zero_series, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  long db = b.degree();
  long dq = a.degree() - db;
  std::vector<Rational> quot(dq >= 0 ? dq + 1 : 0);
  for (long k = dq; k >= 0; k--) {
    if (static_cast<long>(rem.size()) <= k + db) continue;
    Rational c = rem[k + db] / b.c_[db];
    if (c == 0) continue;
    quot[k] = c;
    for (long j = 0; j <= db; j++) rem[k + j] -= c * b.c_[j];
  }
  q = RationalPoly(std::move(quot));
  r = RationalPoly(std::move(rem));
}

RationalPoly RationalPoly::divexact(const RationalPoly& b) const {
  RationalPoly q, r;
  divrem(*this, b, q, r);
  if (!r.is_zero())
    throw error(errc::non_polynomial_residual, "exact polynomial division left a remainder");
  return q;
}

RationalPoly RationalPoly::derivative() const {
  if (degree() < 1) return RationalPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); i++) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / lead());
}

RationalPoly RationalPoly::pow(long e) const {
  RationalPoly acc = constant(1);
  for (long i = 0; i < e; i++) acc = acc * (*this);
  return acc;
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc;
  for (long i = degree(); i >= 0; i--) acc = acc * x + c_[i];
  return acc;
}

namespace {

struct PolyParser {
  std::string s;
  size_t i = 0;

  explicit PolyParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw error(errc::parse_error, why + " at position " + std::to_string(i) + " in '" + s + "'");
  }
  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  bool is_var(char c) const { return c == 'x' || c == 'T'; }

  Integer read_uint() {
    size_t start = i;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
    if (i == start) fail("expected an integer");
    return Integer(s.substr(start, i - start));
  }

  long read_exponent() {  // optional ^k, default 1
    if (eof() || peek() != '^') return 1;
    i++;
    return read_uint().get_si();
  }

  // coefficient * x^k with every piece optional
  RationalPoly read_term(int sign) {
    Rational coeff = sign;
    bool have_digits = !eof() && std::isdigit(static_cast<unsigned char>(peek()));
    if (have_digits) coeff *= Rational(read_uint());
    if (!eof() && peek() == '*') i++;
    if (!eof() && is_var(peek())) {
      i++;
      long e = read_exponent();
      std::vector<Rational> v(e + 1);
      v[e] = coeff;
      return RationalPoly(std::move(v));
    }
    if (!have_digits) fail("expected a term");
    return RationalPoly::constant(coeff);
  }

  RationalPoly read_sum(char stop) {
    int sign = 1;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      sign = (peek() == '-') ? -1 : 1;
      i++;
    }
    RationalPoly acc = read_term(sign);
    while (!eof() && peek() != stop) {
      if (peek() == '+') sign = 1;
      else if (peek() == '-') sign = -1;
      else fail("expected '+' or '-'");
      i++;
      acc = acc + read_term(sign);
    }
    return acc;
  }

  RationalPoly read_product() {
    // input without parentheses is a bare polynomial like "x^2 + 8x + 1"
    if (s.find('(') == std::string::npos) return read_sum('\0');
    RationalPoly acc = RationalPoly::constant(1);
    bool any = false;
    while (!eof()) {
      if (peek() == '*') {
        i++;
        continue;
      }
      RationalPoly f;
      if (peek() == '(') {
        i++;
        f = read_sum(')');
        if (eof() || peek() != ')') fail("unbalanced parenthesis");
        i++;
        long e = read_exponent();
        f = f.pow(e);
      } else if (is_var(peek()) || std::isdigit(static_cast<unsigned char>(peek()))) {
        f = read_term(1);
      } else {
        fail("unexpected character");
      }
      acc = acc * f;
      any = true;
    }
    if (!any) fail("empty polynomial");
    return acc;
  }
};

}  // namespace

RationalPoly RationalPoly::parse(std::string_view text) {
  PolyParser p(text);
  RationalPoly r = p.read_product();
  if (!p.eof()) p.fail("trailing input");
  return r;
}

std::string RationalPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; i--) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
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
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << var;
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// integer polynomial utilities for the primitive PRS gcd
using ZPoly = std::vector<Integer>;

void znormalize(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zprimitive(ZPoly& a) {
  Integer g = zcontent(a);
  if (g == 0 || g == 1) return;
  for (auto& c : a) c /= g;
}

// pseudo-remainder of lc(b)^(deg a - deg b + 1) * a by b
ZPoly zprem(ZPoly a, const ZPoly& b) {
  long db = static_cast<long>(b.size()) - 1;
  const Integer& lb = b.back();
  while (static_cast<long>(a.size()) - 1 >= db) {
    long da = static_cast<long>(a.size()) - 1;
    Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (long j = 0; j <= db; j++) a[da - db + j] -= la * b[j];
    znormalize(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

RationalPoly poly_gcd(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto to_z = [](const RationalPoly& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) {
      Integer d = c.get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    ZPoly z(p.coeffs().size());
    for (size_t i = 0; i < z.size(); i++) {
      Rational scaled = p.coeffs()[i] * Rational(den);
      z[i] = scaled.get_num();
    }
    zprimitive(z);
    return z;
  };
  ZPoly u = to_z(a), v = to_z(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    ZPoly r = zprem(u, v);
    zprimitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> out(u.size());
  for (size_t i = 0; i < u.size(); i++) out[i] = Rational(u[i]);
  return RationalPoly(std::move(out)).monic();
}

RationalPoly radical(const RationalPoly& p) {
  if (p.degree() < 1) return p.is_zero() ? p : RationalPoly::constant(1);
  RationalPoly g = poly_gcd(p, p.derivative());
  return p.divexact(g).monic();
}

PrimePoly::PrimePoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p_ < 2) throw error(errc::parse_error, "modulus must be at least 2");
  for (auto& c : c_) {
    c %= p_;
    if (c < 0) c += p_;
  }
  normalize();
}

void PrimePoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long PrimePoly::lead() const { return c_.empty() ? 0 : c_.back(); }

namespace {
void check_same_modulus(const PrimePoly& a, const PrimePoly& b) {
  if (a.modulus() != b.modulus())
    throw error(errc::parse_error, "mixed moduli in polynomial arithmetic");
}
}  // namespace

PrimePoly operator+(const PrimePoly& a, const PrimePoly& b) {
  check_same_modulus(a, b);
  std::vector<long> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); i++)
    v[i] = ((i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0)) % a.p_;
  return PrimePoly(a.p_, std::move(v));
}

PrimePoly operator-(const PrimePoly& a, const PrimePoly& b) {
  check_same_modulus(a, b);
  std::vector<long> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); i++)
    v[i] = ((i < a.c_.size() ? a.c_[i] : 0) - (i < b.c_.size() ? b.c_[i] : 0)) % a.p_;
  return PrimePoly(a.p_, std::move(v));
}

PrimePoly operator*(const PrimePoly& a, const PrimePoly& b) {
  check_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return PrimePoly::zero(a.p_);
  std::vector<long> v(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); i++) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); j++) v[i + j] = (v[i + j] + a.c_[i] * b.c_[j]) % a.p_;
  }
  return PrimePoly(a.p_, std::move(v));
}

long mod_inverse(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw error(errc::p_divides_denominator, "element not invertible mod p");
  return t < 0 ? t + p : t;
}

void PrimePoly::divrem(const PrimePoly& a, const PrimePoly& b, PrimePoly& q, PrimePoly& r) {
  if (b.is_zero()) throw error(errc::division_by_zero_series, "polynomial division by zero");
  long p = a.p_;
  long db = b.degree();
  long linv = mod_inverse(b.lead(), p);
  std::vector<long> rem = a.c_;
  long dq = a.degree() - db;
  std::vector<long> quot(dq >= 0 ? dq + 1 : 0, 0);
  for (long k = dq; k >= 0; k--) {
    if (static_cast<long>(rem.size()) <= k + db) continue;
    long c = rem[k + db] % p * linv % p;
    if (c == 0) continue;
    quot[k] = c;
    for (long j = 0; j <= db; j++) rem[k + j] = (rem[k + j] - c * b.c_[j]) % p;
  }
  q = PrimePoly(p, std::move(quot));
  r = PrimePoly(p, std::move(rem));
}

PrimePoly PrimePoly::operator%(const PrimePoly& b) const {
  PrimePoly q = zero(p_), r = zero(p_);
  divrem(*this, b, q, r);
  return r;
}

PrimePoly PrimePoly::divexact(const PrimePoly& b) const {
  PrimePoly q = zero(p_), r = zero(p_);
  divrem(*this, b, q, r);
  if (!r.is_zero())
    throw error(errc::non_polynomial_residual, "exact polynomial division left a remainder");
  return q;
}

PrimePoly PrimePoly::derivative() const {
  if (degree() < 1) return zero(p_);
  std::vector<long> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); i++) v[i - 1] = c_[i] * (static_cast<long>(i) % p_) % p_;
  return PrimePoly(p_, std::move(v));
}

PrimePoly PrimePoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  long linv = mod_inverse(lead(), p_);
  std::vector<long> v = c_;
  for (auto& c : v) c = c * linv % p_;
  return PrimePoly(p_, std::move(v));
}

long PrimePoly::eval(long x) const {
  x %= p_;
  if (x < 0) x += p_;
  long acc = 0;
  for (long i = degree(); i >= 0; i--) acc = (acc * x + c_[i]) % p_;
  return acc;
}

std::string PrimePoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; i--) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << var;
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

PrimePoly poly_gcd(const PrimePoly& a, const PrimePoly& b) {
  PrimePoly u = a, v = b;
  while (!v.is_zero()) {
    PrimePoly r = u % v;
    u = v;
    v = r;
  }
  return u.monic();
}

PrimePoly x_pow_mod(const Integer& e, const PrimePoly& f) {
  if (f.degree() < 1)
    throw error(errc::division_by_zero_series, "x_pow_mod needs a modulus of positive degree");
  long p = f.modulus();
  PrimePoly acc = PrimePoly::constant(p, 1);
  PrimePoly base = PrimePoly::x(p) % f;
  long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (long bit = bits - 1; bit >= 0; bit--) {
    acc = (acc * acc) % f;
    if (mpz_tstbit(e.get_mpz_t(), bit)) acc = (acc * base) % f;
  }
  return acc;
}

PrimePoly reduce_mod(const RationalPoly& a, long p) {
  std::vector<long> v(a.degree() + 1);
  for (long i = 0; i <= a.degree(); i++) {
    const Rational c = a.coeff(i);
    long num = static_cast<long>(mpz_fdiv_ui(c.get_num().get_mpz_t(), p));
    long den = static_cast<long>(mpz_fdiv_ui(c.get_den().get_mpz_t(), p));
    if (den == 0)
      throw error(errc::p_divides_denominator,
                  "coefficient denominator divisible by " + std::to_string(p));
    v[i] = num * mod_inverse(den, p) % p;
  }
  return PrimePoly(p, std::move(v));
}

}  // namespace ssp
