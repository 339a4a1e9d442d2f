// Command line front end: supersingular polynomials, quotient genera,
// rationality sweeps, verification suites, and raw q-expansions.

#include <CLI11.hpp>
#include <iostream>

#include "ssp/oracle.h"
#include "ssp/rationality.h"
#include "ssp/ssp_engine.h"
#include "ssp/suites.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitInternal = 3;

int run_ss_poly(long p, long level, const std::string& form_text, bool factored, bool tsv) {
  ssp::FormKind form = ssp::parse_form(form_text);
  ssp::SignedPrimePoly ss = ssp::supersingular_poly_signed(form, p, level);
  if (tsv) {
    std::cout << p << "\t" << level << "\t" << form_text << "\t" << ss.sign << "\t"
              << ss.poly.str() << "\n";
    return kExitOk;
  }
  std::cout << (factored ? ssp::factored_str(ss.poly) : ss.poly.str()) << "\n";
  return kExitOk;
}

int run_genus(const std::string& curve_text) {
  ssp::CurveDescriptor curve = ssp::parse_descriptor(curve_text);
  ssp::GenusBreakdown b = ssp::genus_x0(curve.level);
  std::cout << "curve: " << curve.str() << "\n";
  std::cout << "index: " << b.index << "\n";
  std::cout << "nu2: " << b.elliptic2 << "\n";
  std::cout << "nu3: " << b.elliptic3 << "\n";
  std::cout << "cusps: " << b.cusps << "\n";
  std::cout << "genus X_0(" << curve.level << "): " << b.genus << "\n";
  std::cout << "genus: " << ssp::genus_quotient(curve) << "\n";
  return kExitOk;
}

int run_rationality(const std::string& curve_text, long bound, bool tsv) {
  ssp::CurveDescriptor curve = ssp::parse_descriptor(curve_text);
  if (tsv) {
    for (long p : ssp::primes_in(2, bound)) {
      if (curve.level % p == 0) continue;
      ssp::SupersingularReport rep = ssp::q_p(curve, p);
      std::cout << curve.str() << "\t" << p << "\t" << rep.q_p << "\t"
                << (rep.rational ? "true" : "false") << "\t" << ssp::method_name(rep.method)
                << "\n";
    }
    return kExitOk;
  }
  ssp::RationalityResult res = ssp::rationality_primes(curve, bound);
  std::cout << "curve: " << res.curve.str() << "\n";
  std::cout << "bound: " << res.bound << "\n";
  std::cout << "rationality primes:";
  for (long p : res.primes) std::cout << " " << p;
  if (res.primes.empty()) std::cout << " (none)";
  std::cout << "\n";
  std::cout << "note: " << res.note << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, bool tsv) {
  ssp::Report report = ssp::run_suite(suite);
  size_t width = 0;
  for (const auto& line : report.lines) width = std::max(width, line.label.size());
  for (const auto& line : report.lines) {
    if (tsv) {
      std::cout << (line.pass ? "PASS" : "FAIL") << "\t" << line.label << "\t" << line.detail
                << "\n";
    } else {
      std::cout << (line.pass ? "PASS" : "FAIL") << "  " << line.label;
      if (!line.detail.empty())
        std::cout << std::string(width - line.label.size() + 2, ' ') << line.detail;
      std::cout << "\n";
    }
  }
  std::cout << (report.all_pass ? "all checks passed" : "some checks FAILED") << " ("
            << report.lines.size() << " items)\n";
  return report.all_pass ? kExitOk : kExitVerification;
}

int run_qexp(const std::string& eta, long prec) {
  ssp::EtaQuotientSpec spec = ssp::EtaQuotientSpec::parse(eta);
  std::cout << ssp::eta_quotient(spec, prec).str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supersingular invariants of modular curves with level structure"};
  app.require_subcommand(1);

  auto* ss = app.add_subcommand("ss-poly", "supersingular polynomial for X_0(N) mod p");
  long ss_p = 0, ss_level = 1;
  std::string ss_form = "e";
  bool ss_factored = false, ss_tsv = false;
  ss->add_option("--p", ss_p, "prime p >= 5, not dividing N")->required();
  ss->add_option("--level", ss_level, "level N of X_0(N)")->required();
  ss->add_option("--form", ss_form, "weight p-1 form: e, g or h");
  ss->add_flag("--factored", ss_factored, "print the factorization over F_p");
  ss->add_flag("--tsv", ss_tsv, "tab separated record with the sign");

  auto* genus = app.add_subcommand("genus", "genus of X_0(N) and of its quotient");
  std::string genus_curve;
  genus->add_option("--curve", genus_curve, "descriptor like 2+, 6+6 or 3-")->required();

  auto* rat = app.add_subcommand("rationality", "primes with all supersingular points over F_p");
  std::string rat_curve;
  long rat_bound = 200;
  bool rat_tsv = false;
  rat->add_option("--curve", rat_curve, "descriptor like 2+, 6+6 or 3-")->required();
  rat->add_option("--bound", rat_bound, "sweep primes up to this bound");
  rat->add_flag("--tsv", rat_tsv, "one record per prime: curve, p, Q_p, rational, method");

  auto* verify = app.add_subcommand("verify", "run a golden or property suite");
  std::string suite;
  bool verify_tsv = false;
  verify->add_option("--suite", suite, "one of: table2 table3 appendixA appendixD appendixE oracle moonshine")
      ->required();
  verify->add_flag("--tsv", verify_tsv, "tab separated PASS/FAIL records");

  auto* qexp = app.add_subcommand("qexp", "q-expansion of an eta quotient");
  std::string eta;
  long prec = 10;
  qexp->add_option("--eta", eta, "eta quotient, e.g. 1^24/2^24")->required();
  qexp->add_option("--prec", prec, "exclusive upper bound on the q-exponent");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ss->parsed()) return run_ss_poly(ss_p, ss_level, ss_form, ss_factored, ss_tsv);
    if (genus->parsed()) return run_genus(genus_curve);
    if (rat->parsed()) return run_rationality(rat_curve, rat_bound, rat_tsv);
    if (verify->parsed()) return run_verify(suite, verify_tsv);
    if (qexp->parsed()) return run_qexp(eta, prec);
  } catch (const ssp::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ssp::errc::fixture_mismatch) return kExitVerification;
    return ssp::is_usage_error(e.code()) ? kExitUsage : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
