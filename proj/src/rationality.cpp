#include "ssp/rationality.h"

#include <algorithm>
#include <sstream>

#include "ssp/ssp_engine.h"

namespace ssp {

namespace {

constexpr long kDualMethodBound = 60;  // polynomial route runs alongside genus up to here

std::string join_primes(const std::vector<long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); i++) {
    if (i) os << ", ";
    os << v[i];
  }
  return v.empty() ? std::string("(none)") : os.str();
}

}  // namespace

const char* method_name(QpMethod m) {
  switch (m) {
    case QpMethod::genus_difference: return "genus-difference";
    case QpMethod::polynomial_splitting: return "polynomial-splitting";
    case QpMethod::both: return "both";
  }
  return "?";
}

SupersingularReport q_p(const CurveDescriptor& curve, long p, QpMethod forced) {
  if (!is_prime(p)) throw error(errc::parse_error, std::to_string(p) + " is not prime");
  if (curve.level % p == 0)
    throw error(errc::prime_divides_level,
                std::to_string(p) + " divides the level of " + curve.str());
  SupersingularReport rep;
  rep.curve = curve;
  rep.prime = p;

  long genus_qp = -1, poly_qp = -1;
  bool want_genus = forced != QpMethod::polynomial_splitting;
  bool want_poly = forced != QpMethod::genus_difference;
  bool poly_applicable =
      curve.involutions.size() == 1 && is_supported_level(curve.level) && p >= 5;
  if (want_poly && !poly_applicable)
    throw error(errc::unsupported_level,
                "the splitting method needs X_0(N) with a tabulated principal modulus and p >= 5, "
                "got " + curve.str() + " at p = " + std::to_string(p));
  if (want_genus) {
    long g = genus_quotient(curve);
    long gp = genus_quotient(build_xp(curve, p));
    genus_qp = 2 * (gp - g);
    if (genus_qp < 0)
      throw error(errc::method_disagreement,
                  "genus dropped from " + curve.str() + " to its X^p at p = " + std::to_string(p));
  }
  if (want_poly) {
    PrimePoly ss = supersingular_poly(FormKind::E, p, curve.level);
    SplittingType st = splitting_type(ss);
    poly_qp = 2 * st.quadratic_count;
    rep.ss_poly = std::move(ss);
  }

  if (genus_qp >= 0 && poly_qp >= 0) {
    if (genus_qp != poly_qp)
      throw error(errc::method_disagreement,
                  curve.str() + " at p = " + std::to_string(p) + ": genus method gives " +
                      std::to_string(genus_qp) + ", splitting method gives " +
                      std::to_string(poly_qp));
    rep.method = QpMethod::both;
    rep.q_p = genus_qp;
  } else if (poly_qp >= 0) {
    rep.method = QpMethod::polynomial_splitting;
    rep.q_p = poly_qp;
  } else {
    rep.method = QpMethod::genus_difference;
    rep.q_p = genus_qp;
  }
  rep.rational = (rep.q_p == 0);
  return rep;
}

SupersingularReport q_p(const CurveDescriptor& curve, long p) {
  bool poly_applicable = curve.involutions.size() == 1 && is_supported_level(curve.level) &&
                         p >= 5 && p <= kDualMethodBound;
  return q_p(curve, p, poly_applicable ? QpMethod::both : QpMethod::genus_difference);
}

RationalityResult rationality_primes(const CurveDescriptor& curve, long bound) {
  if (bound < 2) throw error(errc::parse_error, "bound must be at least 2");
  RationalityResult res;
  res.curve = curve;
  res.bound = bound;
  for (long p = 2; p <= bound; p++) {
    if (!is_prime(p) || curve.level % p == 0) continue;
    if (q_p(curve, p).rational) res.primes.push_back(p);
  }
  res.note = "certified for primes up to " + std::to_string(bound) +
             " only; the genus of X^p grows with p, so no further rationality primes are "
             "expected for the tabulated curves, but this run does not prove it beyond the bound";
  return res;
}

Report verify_appendix_a(long bound) {
  if (bound < 100) throw error(errc::parse_error, "verification bound must be at least 100");
  Report report;
  auto run_row = [&](const RationalityRow& row) {
    CurveDescriptor curve = parse_descriptor(row.label);
    std::vector<long> got = rationality_primes(curve, bound).primes;
    bool ok = (got == row.primes);
    std::string detail = ok ? join_primes(got)
                            : "expected {" + join_primes(row.primes) + "}, computed {" +
                                  join_primes(got) + "}";
    report.add(row.label, ok, detail);
  };
  for (const auto& row : rationality_fixture_rows()) run_row(row);
  for (const auto& row : non_monstrous_fixture_rows()) run_row(row);
  return report;
}

Report moonshine_crosscheck() {
  Report report;

  // (a) Fricke square roots in the order 2p class cells vs. the
  // rationality primes of 2+ and 2-
  for (const auto& row : monster_class_fixture()) {
    std::vector<long> bold;
    for (const auto& cell : row.cells)
      for (const auto& [label, fricke] : cell.classes)
        if (fricke) {
          bold.push_back(cell.prime);
          break;
        }
    CurveDescriptor curve =
        parse_descriptor(std::string(row.label) == "2A" ? "2+" : "2-");
    std::vector<long> rat = rationality_primes(curve, 200).primes;
    bool ok = (bold == rat);
    report.add(std::string("monster classes ") + row.label + " vs " + curve.str(), ok,
               ok ? join_primes(bold)
                  : "classes give {" + join_primes(bold) + "}, curve gives {" + join_primes(rat) +
                        "}");
  }

  // (b), (c) nonzero twisted Euler characters vs. the lambency curve
  for (const UmbralCharacterTable* table : {&umbral_fixture_level2(), &umbral_fixture_level5()}) {
    CurveDescriptor curve = parse_descriptor(table->lambency);
    std::vector<long> shadow_primes;
    for (const auto& col : table->columns) {
      bool nonzero = false;
      for (long v : col.character_values) nonzero = nonzero || (v != 0);
      if (nonzero && is_prime(col.n_g) && curve.level % col.n_g != 0)
        shadow_primes.push_back(col.n_g);
    }
    std::sort(shadow_primes.begin(), shadow_primes.end());
    shadow_primes.erase(std::unique(shadow_primes.begin(), shadow_primes.end()),
                        shadow_primes.end());
    std::vector<long> rat = rationality_primes(curve, 200).primes;
    bool ok = (shadow_primes == rat);
    report.add(std::string("umbral characters at lambency ") + table->lambency, ok,
               ok ? join_primes(shadow_primes)
                  : "characters give {" + join_primes(shadow_primes) + "}, curve gives {" +
                        join_primes(rat) + "}");
  }
  return report;
}

const std::vector<RationalityRow>& rationality_fixture_rows() {
  static const std::vector<RationalityRow> rows = {
      {"2+", {3, 5, 7, 11, 13, 17, 19, 23, 31, 47}},
      {"2-", {3, 5, 7, 11, 23}},
      {"3+", {2, 5, 7, 11, 13, 17, 23, 29}},
      {"3-", {2, 5, 11}},
      {"4+", {3, 5, 7, 11, 23}},
      {"4-", {3, 7}},
      {"5+", {2, 3, 7, 11, 19}},
      {"5-", {2}},
      {"6+", {5, 7, 11, 13}},
      {"6+6", {5, 11}},
      {"6+3", {5}},
      {"7+", {2, 3, 5, 17}},
      {"7-", {3}},
      {"8+", {3, 7}},
      {"9+", {2, 5}},
      {"9-", {2}},
      {"10+", {3, 7, 11}},
      {"10+5", {3}},
      {"11+", {2, 3, 5}},
      {"12+", {5}},
      {"13+", {2, 3}},
      {"14+", {3, 5}},
      {"14+14", {3}},
      {"15+", {2, 7}},
      {"15+15", {2}},
      {"17+", {2, 3, 7}},
      {"19+", {2, 5}},
      {"20+", {3}},
      {"21+", {2, 5}},
      {"22+", {3, 5}},
      {"23+", {2, 3}},
      {"25+", {2}},
      {"26+", {3}},
      {"27+", {2}},
      {"29+", {3}},
      {"31+", {2}},
      {"33+", {2}},
      {"35+", {2, 3}},
      {"47+", {2}},
      {"55+", {2}},
  };
  return rows;
}

const std::vector<RationalityRow>& non_monstrous_fixture_rows() {
  static const std::vector<RationalityRow> rows = {
      {"25-", {}},
      {"49+49", {}},
      {"50+50", {}},
  };
  return rows;
}

const std::vector<MonsterClassRow>& monster_class_fixture() {
  static const std::vector<MonsterClassRow> rows = {
      {"2A",
       {
           {3, {{"6A", true}, {"6D", false}}},
           {5, {{"10A", true}, {"10C", false}}},
           {7, {{"14A", true}}},
           {11, {{"22A", true}}},
           {13, {{"26A", true}}},
           {17, {{"34A", true}}},
           {19, {{"38A", true}}},
           {23, {{"46CD", true}}},
           {29, {}},
           {31, {{"62AB", true}}},
           {41, {}},
           {47, {{"94AB", true}}},
           {59, {}},
           {71, {}},
       }},
      {"2B",
       {
           {3, {{"6B", false}, {"6C", true}, {"6E", false}, {"6F", false}}},
           {5, {{"10B", true}, {"10D", false}, {"10E", false}}},
           {7, {{"14B", true}, {"14C", false}}},
           {11, {{"22B", true}}},
           {13, {{"26B", false}}},
           {17, {}},
           {19, {}},
           {23, {{"46AB", true}}},
           {29, {}},
           {31, {}},
           {41, {}},
           {47, {}},
           {59, {}},
           {71, {}},
       }},
  };
  return rows;
}

const UmbralCharacterTable& umbral_fixture_level2() {
  static const UmbralCharacterTable table = {
      "2-",
      {
          {"3A", 3, {6}},
          {"3B", 3, {0}},
          {"5A", 5, {4}},
          {"7AB", 7, {3}},
          {"11A", 11, {2}},
          {"23AB", 23, {1}},
      },
  };
  return table;
}

const UmbralCharacterTable& umbral_fixture_level5() {
  static const UmbralCharacterTable table = {
      "5-",
      {
          {"2B", 2, {2, -2}},
          {"2C", 2, {2, 2}},
          {"3A", 3, {0, 0}},
          {"6A", 3, {0, 0}},
      },
  };
  return table;
}

}  // namespace ssp
