#include "ssp/suites.h"

#include <algorithm>
#include <sstream>

#include "ssp/oracle.h"
#include "ssp/ssp_engine.h"

namespace ssp {

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  for (long p = std::max(lo, 2L); p <= hi; p++)
    if (is_prime(p)) out.push_back(p);
  return out;
}

namespace {

Report suite_table2() {
  Report report;
  for (const auto& row : level2_ss_fixture()) {
    PrimePoly expected = PrimePoly::constant(row.p, 1);
    for (const auto& f : row.factors) expected = expected * f;
    PrimePoly got = supersingular_poly(FormKind::E, row.p, 2);
    bool ok = (got == expected);
    report.add("ss poly for level 2, p = " + std::to_string(row.p), ok,
               ok ? factored_str(got) : "computed " + got.str() + ", table has " + expected.str());
  }
  return report;
}

Report suite_table3() {
  Report report;
  const GenusTableFixture& fx = xp_genus_fixture();
  for (const char* label : {"2+", "2-"}) {
    CurveDescriptor curve = parse_descriptor(label);
    const std::vector<long>& expected =
        (std::string(label) == "2+") ? fx.genus_2plus : fx.genus_2minus;
    for (size_t i = 0; i < fx.primes.size(); i++) {
      long p = fx.primes[i];
      long got = genus_quotient(build_xp(curve, p));
      bool ok = (got == expected[i]);
      report.add("genus of (" + std::string(label) + ")^" + std::to_string(p), ok,
                 ok ? std::to_string(got)
                    : "computed " + std::to_string(got) + ", table has " +
                          std::to_string(expected[i]));
    }
  }
  return report;
}

Report suite_appendix_d() {
  Report report;
  for (long n : supported_levels()) {
    const GPolyFixture& fx = g_poly_fixture(n);
    auto product = [](const std::vector<RationalPoly>& fs) {
      RationalPoly acc = RationalPoly::constant(1);
      for (const auto& f : fs) acc = acc * f;
      return acc;
    };
    bool dok = (g_poly_part(n, false) == product(fx.delta_factors));
    bool eok = (g_poly_part(n, true) == product(fx.epsilon_factors));
    report.add("g-polynomial parts for level " + std::to_string(n), dok && eok,
               dok ? (eok ? "delta and epsilon parts match"
                          : "epsilon part differs from the table")
                   : "delta part differs from the table");
  }
  return report;
}

Report suite_appendix_e() {
  Report report;
  for (long n : supported_levels())
    report.add("modular relation for level " + std::to_string(n), verify_modular_relation(n));
  return report;
}

Report suite_oracle() {
  Report report;
  for (long p : primes_in(5, 60)) {
    PrimePoly ss1 = supersingular_poly(FormKind::E, p, 1);
    report.add("level 1 root set vs point counts, p = " + std::to_string(p),
               check_level1(p, ss1));
  }
  for (long n : {2L, 3L, 5L, 7L, 13L}) {
    for (long p : primes_in(5, 60)) {
      if (n % p == 0) continue;
      PrimePoly ssn = supersingular_poly(FormKind::E, p, n);
      LevelNCheck check = check_leveln(p, n, ssn, modular_relation(n));
      std::string detail;
      for (const auto& issue : check.issues) detail += (detail.empty() ? "" : "; ") + issue;
      report.add("level " + std::to_string(n) + " roots over level 1, p = " + std::to_string(p),
                 check.pass, detail);
    }
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "table2", "table3", "appendixA", "appendixD", "appendixE", "oracle", "moonshine"};
  return names;
}

Report run_suite(const std::string& name) {
  if (name == "table2") return suite_table2();
  if (name == "table3") return suite_table3();
  if (name == "appendixA") return verify_appendix_a(200);
  if (name == "appendixD") return suite_appendix_d();
  if (name == "appendixE") return suite_appendix_e();
  if (name == "oracle") return suite_oracle();
  if (name == "moonshine") return moonshine_crosscheck();
  throw error(errc::parse_error, "unknown suite '" + name + "'");
}

}  // namespace ssp
