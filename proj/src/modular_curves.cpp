#include "ssp/modular_curves.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ssp {

namespace {

long mod(long a, long q) {
  a %= q;
  return a < 0 ? a + q : a;
}

long inv_mod(long a, long q) {
  if (q == 1) return 0;
  long t = 0, nt = 1, r = q, nr = mod(a, q);
  while (nr != 0) {
    long k = r / nr;
    t -= k * nt;
    std::swap(t, nt);
    r -= k * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw error(errc::parse_error, "non-invertible residue");
  return mod(t, q);
}

std::vector<std::pair<long, long>> factorize(long n) {
  std::vector<std::pair<long, long>> f;
  for (long p = 2; p * p <= n; p++) {
    if (n % p) continue;
    long k = 0;
    while (n % p == 0) {
      n /= p;
      k++;
    }
    f.emplace_back(p, k);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

long euler_phi(long n) {
  long r = n;
  for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
  return r;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; p++)
    if (n % p == 0) return false;
  return true;
}

std::vector<long> exact_divisors(long n) {
  std::vector<long> out = {1};
  for (auto [p, k] : factorize(n)) {
    long pk = 1;
    for (long i = 0; i < k; i++) pk *= p;
    size_t sz = out.size();
    for (size_t i = 0; i < sz; i++) out.push_back(out[i] * pk);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CurveDescriptor CurveDescriptor::make(long level, std::vector<long> divisors) {
  if (level < 1) throw error(errc::parse_error, "level must be positive");
  for (long e : divisors) {
    if (e < 1 || level % e != 0)
      throw error(errc::not_exact_divisor, std::to_string(e) + " does not divide " + std::to_string(level));
    if (std::gcd(e, level / e) != 1)
      throw error(errc::not_exact_divisor,
                  std::to_string(e) + " is not an exact divisor of " + std::to_string(level));
  }
  divisors.push_back(1);
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
  // close under e*f/gcd(e,f)^2
  bool grew = true;
  while (grew) {
    grew = false;
    size_t sz = divisors.size();
    for (size_t i = 0; i < sz; i++)
      for (size_t j = i + 1; j < sz; j++) {
        long g = std::gcd(divisors[i], divisors[j]);
        long e = divisors[i] / g * (divisors[j] / g);
        if (!std::binary_search(divisors.begin(), divisors.end(), e)) {
          divisors.push_back(e);
          std::sort(divisors.begin(), divisors.end());
          grew = true;
        }
      }
  }
  CurveDescriptor c;
  c.level = level;
  c.involutions = std::move(divisors);
  return c;
}

std::string CurveDescriptor::str() const {
  std::ostringstream os;
  os << level;
  if (involutions.size() == 1) {
    os << "-";
    return os.str();
  }
  if (involutions == exact_divisors(level)) {
    os << "+";
    return os.str();
  }
  os << "+";
  bool first = true;
  for (long e : involutions) {
    if (e == 1) continue;
    if (!first) os << ",";
    os << e;
    first = false;
  }
  return os.str();
}

CurveDescriptor parse_descriptor(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
  if (i == 0 || i == s.size())
    throw error(errc::parse_error, "expected 'N+...' or 'N-': '" + s + "'");
  long level = std::stol(s.substr(0, i));
  char op = s[i++];
  if (op == '-') {
    if (i != s.size()) throw error(errc::parse_error, "unexpected text after '-': '" + s + "'");
    return CurveDescriptor::make(level, {});
  }
  if (op != '+') throw error(errc::parse_error, "expected '+' or '-': '" + s + "'");
  if (i == s.size()) return CurveDescriptor::make(level, exact_divisors(level));
  std::vector<long> divs;
  while (i < s.size()) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
    if (i == start) throw error(errc::parse_error, "expected a divisor: '" + s + "'");
    divs.push_back(std::stol(s.substr(start, i - start)));
    if (i < s.size()) {
      if (s[i] != ',') throw error(errc::parse_error, "expected ',': '" + s + "'");
      i++;
      if (i == s.size()) throw error(errc::parse_error, "trailing ',': '" + s + "'");
    }
  }
  return CurveDescriptor::make(level, std::move(divs));
}

GenusBreakdown genus_x0(long n) {
  if (n < 1) throw error(errc::parse_error, "level must be positive");
  auto fact = factorize(n);
  long mu = n;
  for (auto [p, k] : fact) mu = mu / p * (p + 1);

  long nu2 = 1;
  if (n % 4 == 0) {
    nu2 = 0;
  } else {
    for (auto [p, k] : fact) {
      if (p == 2) continue;
      nu2 *= (p % 4 == 1) ? 2 : 0;
    }
  }
  long nu3 = 1;
  if (n % 9 == 0) {
    nu3 = 0;
  } else {
    for (auto [p, k] : fact) {
      if (p == 3) continue;
      nu3 *= (p % 3 == 1) ? 2 : 0;
    }
  }
  long nuinf = 0;
  for (long d = 1; d * d <= n; d++) {
    if (n % d) continue;
    nuinf += euler_phi(std::gcd(d, n / d));
    if (d != n / d) nuinf += euler_phi(std::gcd(n / d, d));
  }
  long twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * nuinf;
  if (twelve_g % 12 != 0 || twelve_g < 0)
    throw error(errc::non_integral_genus, "genus formula failed for level " + std::to_string(n));
  return GenusBreakdown{mu, nu2, nu3, nuinf, twelve_g / 12};
}

long class_number(long d) {
  if (d >= 0 || (mod(d, 4) != 0 && mod(d, 4) != 1))
    throw error(errc::invalid_discriminant, std::to_string(d));
  static std::map<long, long> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  // reduced forms: -a < b <= a <= c, b >= 0 when a == c, gcd(a,b,c) = 1
  long count = 0;
  for (long a = 1; 3 * a * a <= -d; a++) {
    for (long b = -a + 1; b <= a; b++) {
      long num = b * b - d;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      count++;
    }
  }
  std::lock_guard<std::mutex> lock(mtx);
  cache[d] = count;
  return count;
}

std::vector<std::pair<long, long>> cusp_representatives(long n) {
  std::vector<std::pair<long, long>> reps;
  for (long d = 1; d <= n; d++) {
    if (n % d) continue;
    long g = std::gcd(d, n / d);
    for (long x = 1; x <= g; x++) {
      if (std::gcd(x, g) != 1) continue;
      long a = x;
      while (std::gcd(a, d) != 1) a += g;
      reps.emplace_back(a, d);
    }
  }
  return reps;
}

// Cremona, Algorithms for Modular Elliptic Curves, Prop 2.2.3: a1/c1 and
// a2/c2 (in lowest terms) are Gamma_0(n)-equivalent iff
// s1*c2 == s2*c1 mod gcd(c1*c2, n), where a_j*s_j == 1 mod c_j.
bool cusps_equivalent(long n, std::pair<long, long> c1, std::pair<long, long> c2) {
  auto [a1, q1] = c1;
  auto [a2, q2] = c2;
  if (std::gcd(q1, n) != std::gcd(q2, n)) return false;
  long s1 = inv_mod(a1, q1);
  long s2 = inv_mod(a2, q2);
  long g = std::gcd(q1 * q2, n);
  return mod(s1 * q2 - s2 * q1, g) == 0;
}

long count_fixed_cusps(long n, long q) {
  long m = n / q;
  // integer matrix [[q*x, y], [n, q]] of determinant q, with q*x - m*y = 1
  long x = inv_mod(q, m);
  if (m == 1) x = 1;
  long y = (q * x - 1) / m;
  long count = 0;
  for (auto [a, c] : cusp_representatives(n)) {
    long ia = q * x * a + y * c;
    long ic = n * a + q * c;
    long g = std::gcd(std::abs(ia), ic);
    if (cusps_equivalent(n, {a, c}, {ia / g, ic / g})) count++;
  }
  return count;
}

namespace {

// 2x2 matrices over Z/q describing the action of an order element on the
// q-torsion, in the basis (1, theta) with theta = (D + sqrt(D))/2.
struct Mat2 {
  long a, b, c, d;
};

Mat2 mat_mul(const Mat2& u, const Mat2& v, long q) {
  return Mat2{mod(u.a * v.a + u.b * v.c, q), mod(u.a * v.b + u.b * v.d, q),
              mod(u.c * v.a + u.d * v.c, q), mod(u.c * v.b + u.d * v.d, q)};
}

// x + y*theta; theta has trace D and norm (D^2 - D)/4
Mat2 order_element(long disc, long x, long y, long q) {
  long ntheta = mod((disc * disc - disc) / 4, q);
  long ttheta = mod(disc, q);
  return Mat2{mod(x, q), mod(-y * ntheta, q), mod(y, q), mod(x + y * ttheta, q)};
}

// Cyclic subgroups of order p^k of (Z/p^k)^2: <(1, t)> for t in [0, p^k)
// and <(s, 1)> for s in p*[0, p^(k-1)).  Index scheme: t, then q + s/p.
struct SubgroupTable {
  long p, q;  // q = p^k
  long size() const { return q + q / p; }
  std::pair<long, long> generator(long idx) const {
    if (idx < q) return {1, idx};
    return {(idx - q) * p, 1};
  }
  long index_of(std::pair<long, long> v) const {
    auto [v1, v2] = v;
    if (v1 % p != 0) {
      return mod(v2 * inv_mod(v1, q), q);
    }
    long s = mod(v1 * inv_mod(v2, q), q);
    return q + s / p;
  }
  bool stable_under(const Mat2& A, long idx) const {
    auto [v1, v2] = generator(idx);
    long w1 = mod(A.a * v1 + A.b * v2, q);
    long w2 = mod(A.c * v1 + A.d * v2, q);
    if (idx < q) return w2 == mod(w1 * idx, q);
    return w1 == mod(w2 * v1, q);
  }
  long image_index(const Mat2& A, long idx) const {
    auto [v1, v2] = generator(idx);
    return index_of({mod(A.a * v1 + A.b * v2, q), mod(A.c * v1 + A.d * v2, q)});
  }
};

// Number of alpha-stable cyclic p^k-subgroups.
long stable_count(long disc, long x, long y, long p, long k) {
  long q = 1;
  for (long i = 0; i < k; i++) q *= p;
  SubgroupTable tab{p, q};
  Mat2 A = order_element(disc, x, y, q);
  long count = 0;
  for (long idx = 0; idx < tab.size(); idx++)
    if (tab.stable_under(A, idx)) count++;
  return count;
}

long stable_product(long disc, long x, long y, long m) {
  long prod = 1;
  for (auto [p, k] : factorize(m)) {
    prod *= stable_count(disc, x, y, p, k);
    if (prod == 0) break;
  }
  return prod;
}

// Discriminants -3 and -4 carry extra automorphisms.  Configurations are
// level structures stable under u*lambda for at least one unit u, counted
// up to the action of the unit group (Burnside over the cyclic group
// generated by u0 = omega resp. i).
long orbit_count(long disc, std::pair<long, long> lambda, std::pair<long, long> u0,
                 const std::vector<std::pair<long, long>>& units, long m) {
  size_t w = units.size();
  auto fact = factorize(m);
  size_t np = fact.size();

  std::vector<SubgroupTable> tabs;
  std::vector<std::vector<unsigned>> masks(np);
  std::vector<std::vector<long>> perms(np);
  for (size_t pi = 0; pi < np; pi++) {
    auto [p, k] = fact[pi];
    long q = 1;
    for (long i = 0; i < k; i++) q *= p;
    SubgroupTable tab{p, q};
    Mat2 U0 = order_element(disc, u0.first, u0.second, q);
    std::vector<Mat2> L;
    for (auto [ux, uy] : units)
      L.push_back(mat_mul(order_element(disc, ux, uy, q),
                          order_element(disc, lambda.first, lambda.second, q), q));
    masks[pi].resize(tab.size());
    perms[pi].resize(tab.size());
    for (long idx = 0; idx < tab.size(); idx++) {
      unsigned bits = 0;
      for (size_t ui = 0; ui < w; ui++)
        if (tab.stable_under(L[ui], idx)) bits |= (1u << ui);
      masks[pi][idx] = bits;
      perms[pi][idx] = tab.image_index(U0, idx);
    }
    tabs.push_back(tab);
  }

  // F_j = #{tuples fixed by u0^j admitting a common stabilizing unit},
  // by inclusion-exclusion over nonempty unit subsets.
  long total = 0;
  for (size_t j = 0; j < w; j++) {
    long fj = 0;
    for (unsigned subset = 1; subset < (1u << w); subset++) {
      long prod = 1;
      for (size_t pi = 0; pi < np && prod != 0; pi++) {
        long cnt = 0;
        for (long idx = 0; idx < tabs[pi].size(); idx++) {
          if ((masks[pi][idx] & subset) != subset) continue;
          long im = idx;
          for (size_t r = 0; r < j; r++) im = perms[pi][im];
          if (im == idx) cnt++;
        }
        prod *= cnt;
      }
      fj += (__builtin_popcount(subset) % 2 == 1) ? prod : -prod;
    }
    total += fj;
  }
  if (total % static_cast<long>(w) != 0)
    throw error(errc::non_integral_genus, "orbit count not divisible by the unit group order");
  return total / static_cast<long>(w);
}

}  // namespace

long fixed_points(long n, long q) {
  if (q <= 1 || n % q != 0 || std::gcd(q, n / q) != 1)
    throw error(errc::not_exact_divisor,
                std::to_string(q) + " is not an exact divisor > 1 of " + std::to_string(n));
  long m = n / q;
  long total = count_fixed_cusps(n, q);
  if (q == 2) {
    // alpha = 1 + i of norm 2 in Z[i], plus sqrt(-2) in Z[sqrt(-2)]
    total += orbit_count(-4, {3, 1}, {2, 1}, {{1, 0}, {2, 1}}, m);
    total += class_number(-8) * stable_product(-8, 4, 1, m);
  } else if (q == 3) {
    // alpha = 1 - omega of norm 3 in Z[omega], plus sqrt(-3) in Z[sqrt(-3)]
    total += orbit_count(-3, {0, -1}, {1, 1}, {{1, 0}, {1, 1}, {-2, -1}}, m);
    total += class_number(-12) * stable_product(-12, 6, 1, m);
  } else {
    // sqrt(-q) = 2q + theta in the order of discriminant -4q
    total += class_number(-4 * q) * stable_product(-4 * q, 2 * q, 1, m);
    // and q + 2*theta in the maximal order when q = 3 mod 4
    if (q % 4 == 3) total += class_number(-q) * stable_product(-q, q, 2, m);
  }
  return total;
}

long genus_quotient(const CurveDescriptor& curve) {
  long g = genus_x0(curve.level).genus;
  long order = static_cast<long>(curve.involutions.size());
  if (order == 1) return g;
  long ram = 0;
  for (long e : curve.involutions)
    if (e != 1) ram += fixed_points(curve.level, e);
  // 2g - 2 = |W| (2g' - 2) + sum of fixed points
  long num = 2 * g - 2 - ram;
  if (num % (2 * order) != 0)
    throw error(errc::non_integral_genus,
                "Hurwitz count is not integral for " + curve.str() +
                    " (2g-2=" + std::to_string(2 * g - 2) + ", ram=" + std::to_string(ram) + ")");
  long gq = num / (2 * order) + 1;
  if (gq < 0)
    throw error(errc::non_integral_genus, "negative quotient genus for " + curve.str());
  return gq;
}

CurveDescriptor build_xp(const CurveDescriptor& curve, long p) {
  if (!is_prime(p)) throw error(errc::parse_error, std::to_string(p) + " is not prime");
  if (curve.level % p == 0)
    throw error(errc::prime_divides_level,
                std::to_string(p) + " divides the level " + std::to_string(curve.level));
  std::vector<long> divs = curve.involutions;
  for (long e : curve.involutions) divs.push_back(p * e);
  return CurveDescriptor::make(curve.level * p, std::move(divs));
}

}  // namespace ssp
