#ifndef SSP_MODULAR_CURVES_H
#define SSP_MODULAR_CURVES_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssp/error.h"

namespace ssp {

// X_0(N) together with a group of Atkin-Lehner involutions w_e.  The
// involution labels are exact divisors of N (e | N with gcd(e, N/e) = 1),
// always include 1, and are closed under e*f/gcd(e,f)^2.
struct CurveDescriptor {
  long level = 1;
  std::vector<long> involutions = {1};  // sorted ascending, contains 1

  // Closes the listed divisors under the group law and validates them.
  static CurveDescriptor make(long level, std::vector<long> divisors);

  bool operator==(const CurveDescriptor& o) const {
    return level == o.level && involutions == o.involutions;
  }
  // Notation "N-", "N+", "N+e,f,..." as in the descriptor grammar.
  std::string str() const;
};

// Grammar: "N-" (no involutions), "N+" (all exact divisors),
// "N+e,f,..." (listed divisors, closed under the group law).
CurveDescriptor parse_descriptor(std::string_view text);

std::vector<long> exact_divisors(long n);
bool is_prime(long n);

struct GenusBreakdown {
  long index;      // mu = [PSL_2(Z) : Gamma_0(N)]
  long elliptic2;  // nu_2
  long elliptic3;  // nu_3
  long cusps;      // nu_inf
  long genus;
};

// Classical genus formula for X_0(N).
GenusBreakdown genus_x0(long n);

// Number of classes of primitive positive definite binary quadratic forms
// of discriminant d < 0, by enumeration of reduced forms.  Memoized.
long class_number(long d);

// Number of fixed points of w_q on X_0(n), where q > 1 is an exact divisor
// of n.  Counts CM points (orders containing a square root of -q acting
// with cyclic kernel, with stable level structure away from q) plus cusps
// fixed by w_q.
long fixed_points(long n, long q);

// Cusps of X_0(n) fixed by w_q, by letting an explicit w_q matrix act on a
// full set of cusp representatives.
long count_fixed_cusps(long n, long q);

// One representative (a, c) per cusp class of X_0(n).
std::vector<std::pair<long, long>> cusp_representatives(long n);
bool cusps_equivalent(long n, std::pair<long, long> c1, std::pair<long, long> c2);

// Genus of the quotient of X_0(N) by the involution group, via Hurwitz for
// an elementary abelian 2-group action.  Throws NonIntegralGenus if the
// fixed point counts are inconsistent.
long genus_quotient(const CurveDescriptor& curve);

// The curve X_0(Np) + {p*e : e in W} u W for a prime p not dividing N.
CurveDescriptor build_xp(const CurveDescriptor& curve, long p);

}  // namespace ssp

#endif
