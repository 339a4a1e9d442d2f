#include "ssp/oracle.h"

#include <algorithm>

#include "ssp/modular_curves.h"

namespace ssp {

namespace {

constexpr long kQuadraticFieldBound = 60;  // the F_{p^2} sweep is O(p^4)

int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  // Euler's criterion
  long r = 1, base = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// y^2 = x^3 + ax + b with the given j-invariant
void model_for_j(const QuadExtField& f, Fp2 j, Fp2& a, Fp2& b) {
  Fp2 j1728 = f.from_int(1728);
  if (f.is_zero(j)) {
    a = f.from_int(0);
    b = f.from_int(1);
  } else if (j == j1728) {
    a = f.from_int(1);
    b = f.from_int(0);
  } else {
    Fp2 c = f.mul(j, f.sub(j1728, j));  // j(1728 - j)
    a = f.mul(f.from_int(3), c);
    b = f.mul(f.from_int(2), f.mul(c, f.sub(j1728, j)));
  }
}

}  // namespace

QuadExtField::QuadExtField(long p) : p_(p) {
  if (p < 3 || !is_prime(p)) throw error(errc::parse_error, "field characteristic must be an odd prime");
  ns_ = 0;
  for (long c = 2; c < p; c++) {
    if (legendre(c, p) == -1) {
      ns_ = c;
      break;
    }
  }
  square_.assign(p_ * p_, 0);
  for (long a = 0; a < p_; a++)
    for (long b = 0; b < p_; b++) {
      Fp2 sq = mul({a, b}, {a, b});
      square_[sq.a * p_ + sq.b] = 1;
    }
}

Fp2 QuadExtField::inv(Fp2 x) const {
  if (is_zero(x)) throw error(errc::division_by_zero_series, "inverse of zero in F_p^2");
  // (a + bs)^-1 = (a - bs) / (a^2 - ns b^2)
  long norm = (x.a * x.a - x.b * x.b % p_ * ns_ % p_ + p_ * p_) % p_;
  long ninv = mod_inverse(norm, p_);
  return {x.a * ninv % p_, (p_ - x.b) * ninv % p_};
}

Fp2 QuadExtField::eval(const PrimePoly& poly, Fp2 x) const {
  Fp2 acc = from_int(0);
  for (long i = poly.degree(); i >= 0; i--) acc = add(mul(acc, x), from_int(poly.coeff(i)));
  return acc;
}

bool is_supersingular_j(const QuadExtField& f, Fp2 j, bool twist) {
  Fp2 a, b;
  model_for_j(f, j, a, b);
  if (twist) {
    // (a, b) -> (a u^2, b u^3) for a non-square u flips the quadratic twist
    Fp2 u = {0, 1};  // s itself is a non-square in F_{p^2}
    Fp2 u2 = f.mul(u, u);
    a = f.mul(a, u2);
    b = f.mul(b, f.mul(u2, u));
  }
  // trace of Frobenius mod p via the character sum: #E = q + 1 + sum chi(x^3+ax+b)
  long p = f.p();
  long sum = 0;
  for (long xa = 0; xa < p; xa++)
    for (long xb = 0; xb < p; xb++) {
      Fp2 x{xa, xb};
      Fp2 val = f.add(f.mul(f.mul(x, x), x), f.add(f.mul(a, x), b));
      sum += f.chi(val);
    }
  return sum % p == 0;  // t = -sum
}

std::vector<Fp2> supersingular_j_set(long p, FieldKind kind) {
  if (p < 5 || !is_prime(p)) throw error(errc::parse_error, "oracle needs a prime p >= 5");
  std::vector<Fp2> out;
  if (kind == FieldKind::base) {
    for (long j = 0; j < p; j++) {
      long a, b;
      if (j == 0) {
        a = 0;
        b = 1;
      } else if (j == 1728 % p) {
        a = 1;
        b = 0;
      } else {
        long c = j % p * ((1728 - j) % p + p) % p;
        a = 3 * c % p;
        b = 2 * c % p * (((1728 - j) % p + p) % p) % p;
      }
      long sum = 0;
      for (long x = 0; x < p; x++) sum += legendre(((x * x % p * x + a * x + b) % p), p);
      if (sum == 0) out.push_back({j, 0});  // #E(F_p) = p + 1 exactly
    }
    return out;
  }
  if (p > kQuadraticFieldBound)
    throw error(errc::field_too_large,
                "quadratic sweep capped at p <= " + std::to_string(kQuadraticFieldBound));
  QuadExtField f(p);
  for (long ja = 0; ja < p; ja++)
    for (long jb = 0; jb < p; jb++)
      if (is_supersingular_j(f, {ja, jb})) out.push_back({ja, jb});
  return out;
}

bool check_level1(long p, const PrimePoly& ssp1) {
  if (p > kQuadraticFieldBound)
    throw error(errc::field_too_large, "check capped at p <= " + std::to_string(kQuadraticFieldBound));
  if (ssp1.modulus() != p) throw error(errc::parse_error, "modulus mismatch");
  QuadExtField f(p);
  std::vector<Fp2> roots;
  for (long a = 0; a < p; a++)
    for (long b = 0; b < p; b++)
      if (f.is_zero(f.eval(ssp1, {a, b}))) roots.push_back({a, b});
  if (static_cast<long>(roots.size()) != ssp1.degree()) return false;
  std::vector<Fp2> expected = supersingular_j_set(p, FieldKind::quadratic);
  std::sort(roots.begin(), roots.end());
  std::sort(expected.begin(), expected.end());
  return roots == expected;
}

LevelNCheck check_leveln(long p, long n, const PrimePoly& sspn, const ModularRelation& rel) {
  LevelNCheck result;
  if (p > kQuadraticFieldBound)
    throw error(errc::field_too_large, "check capped at p <= " + std::to_string(kQuadraticFieldBound));
  if (n % p == 0) throw error(errc::prime_divides_level, std::to_string(p));
  QuadExtField f(p);
  std::vector<Fp2> sset = supersingular_j_set(p, FieldKind::quadratic);
  std::sort(sset.begin(), sset.end());
  PrimePoly num = reduce_mod(rel.numerator, p);
  PrimePoly den = reduce_mod(rel.denominator, p);
  long roots = 0;
  result.pass = true;
  for (long a = 0; a < p; a++)
    for (long b = 0; b < p; b++) {
      Fp2 t{a, b};
      if (!f.is_zero(f.eval(sspn, t))) continue;
      roots++;
      Fp2 d = f.eval(den, t);
      if (f.is_zero(d)) {
        result.pass = false;
        result.issues.push_back("denominator vanishes at root (" + std::to_string(a) + ", " +
                                std::to_string(b) + ")");
        continue;
      }
      Fp2 j = f.mul(f.eval(num, t), f.inv(d));
      if (!std::binary_search(sset.begin(), sset.end(), j)) {
        result.pass = false;
        result.issues.push_back("root (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") maps to a non-supersingular j");
      }
    }
  if (roots != sspn.degree()) {
    result.pass = false;
    result.issues.push_back("expected " + std::to_string(sspn.degree()) + " roots in F_p^2, found " +
                            std::to_string(roots));
  }
  return result;
}

}  // namespace ssp
