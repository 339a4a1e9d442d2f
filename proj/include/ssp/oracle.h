#ifndef SSP_ORACLE_H
#define SSP_ORACLE_H

#include <string>
#include <vector>

#include "ssp/polynomial.h"
#include "ssp/ssp_engine.h"

namespace ssp {

// Element a + b*s of F_{p^2} with s^2 = ns for a fixed non-residue ns.
struct Fp2 {
  long a = 0;
  long b = 0;
  bool operator==(const Fp2& o) const { return a == o.a && b == o.b; }
  bool operator<(const Fp2& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// Arithmetic in F_{p^2} = F_p(sqrt(ns)), ns the smallest positive
// non-residue mod p, with a precomputed table of squares.
class QuadExtField {
 public:
  explicit QuadExtField(long p);

  long p() const { return p_; }
  long nonresidue() const { return ns_; }

  Fp2 add(Fp2 x, Fp2 y) const { return {(x.a + y.a) % p_, (x.b + y.b) % p_}; }
  Fp2 sub(Fp2 x, Fp2 y) const {
    return {(x.a - y.a + p_) % p_, (x.b - y.b + p_) % p_};
  }
  Fp2 mul(Fp2 x, Fp2 y) const {
    return {(x.a * y.a + x.b * y.b % p_ * ns_) % p_, (x.a * y.b + x.b * y.a) % p_};
  }
  Fp2 scale(long c, Fp2 x) const { return {c * x.a % p_, c * x.b % p_}; }
  Fp2 inv(Fp2 x) const;
  Fp2 frobenius(Fp2 x) const { return {x.a, (p_ - x.b) % p_}; }
  bool is_zero(Fp2 x) const { return x.a == 0 && x.b == 0; }

  // quadratic character: 0 on zero, +-1 otherwise
  int chi(Fp2 x) const { return is_zero(x) ? 0 : (square_[x.a * p_ + x.b] ? 1 : -1); }

  Fp2 from_int(long a) const { return {(a % p_ + p_) % p_, 0}; }
  Fp2 eval(const PrimePoly& poly, Fp2 x) const;

 private:
  long p_;
  long ns_;
  std::vector<unsigned char> square_;
};

enum class FieldKind { base, quadratic };

// j-invariants of supersingular curves over F_p (base) or F_{p^2}
// (quadratic), by naive point counting on one model per j.  Base-field
// elements come back with b = 0.
std::vector<Fp2> supersingular_j_set(long p, FieldKind kind);

// Supersingularity of a single j, optionally of the quadratic twist of the
// standard model (the verdict must not depend on the twist).
bool is_supersingular_j(const QuadExtField& f, Fp2 j, bool twist = false);

// Root set of ss_p^(1) over F_{p^2} equals the point-counting j-set.
bool check_level1(long p, const PrimePoly& ssp1);

struct LevelNCheck {
  bool pass = false;
  std::vector<std::string> issues;
};

// Every root t of ss_p^(N) in F_{p^2} must map under j = num/den to a
// supersingular j-invariant; a vanishing denominator at a root is an error.
LevelNCheck check_leveln(long p, long n, const PrimePoly& sspn, const ModularRelation& rel);

}  // namespace ssp

#endif
