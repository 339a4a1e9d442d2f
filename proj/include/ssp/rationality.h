#ifndef SSP_RATIONALITY_H
#define SSP_RATIONALITY_H

#include <optional>
#include <string>
#include <vector>

#include "ssp/modular_curves.h"
#include "ssp/polynomial.h"

namespace ssp {

enum class QpMethod { genus_difference, polynomial_splitting, both };
const char* method_name(QpMethod m);

struct SupersingularReport {
  CurveDescriptor curve;
  long prime = 0;
  long q_p = 0;        // supersingular points not defined over F_p (always even)
  bool rational = false;
  QpMethod method = QpMethod::genus_difference;
  std::optional<PrimePoly> ss_poly;
};

// Q_p(X) = 2 (genus(X^p) - genus(X)).  For X = X_0(N) with a supported N
// and 5 <= p <= 60, the supersingular polynomial is computed as well and
// the two counts must agree (MethodDisagreement otherwise).
SupersingularReport q_p(const CurveDescriptor& curve, long p);
SupersingularReport q_p(const CurveDescriptor& curve, long p, QpMethod forced);

struct RationalityResult {
  CurveDescriptor curve;
  long bound = 0;
  std::vector<long> primes;
  std::string note;
};

// Primes p <= bound, p not dividing N, with Q_p(X) = 0.
RationalityResult rationality_primes(const CurveDescriptor& curve, long bound);

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;
  bool all_pass = true;
  void add(const std::string& label, bool pass, const std::string& detail = "") {
    lines.push_back({label, pass, detail});
    all_pass = all_pass && pass;
  }
};

// Recomputes the embedded rationality-prime rows (40 curves with primes,
// plus three quotients with none).
Report verify_appendix_a(long bound);

// List-level checks against the embedded monster class data and the two
// twisted Euler character tables.
Report moonshine_crosscheck();

// --- embedded fixtures ---

struct RationalityRow {
  const char* label;  // descriptor notation
  std::vector<long> primes;
};
const std::vector<RationalityRow>& rationality_fixture_rows();   // 40 rows
const std::vector<RationalityRow>& non_monstrous_fixture_rows(); // 3 empty rows

struct MonsterClassCell {
  long prime;
  std::vector<std::pair<const char*, bool>> classes;  // (label, has Fricke square root)
};
struct MonsterClassRow {
  const char* label;  // "2A" or "2B"
  std::vector<MonsterClassCell> cells;
};
const std::vector<MonsterClassRow>& monster_class_fixture();

struct UmbralCharacterColumn {
  const char* class_label;
  long n_g;
  std::vector<long> character_values;  // twisted Euler characters at g
};
struct UmbralCharacterTable {
  const char* lambency;  // descriptor of the lambency curve
  std::vector<UmbralCharacterColumn> columns;
};
const UmbralCharacterTable& umbral_fixture_level2();
const UmbralCharacterTable& umbral_fixture_level5();

}  // namespace ssp

#endif
