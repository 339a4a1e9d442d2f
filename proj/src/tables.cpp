// Embedded eta-quotient data, modular relations, and golden fixture rows
// for the supported genus zero levels.

#include <array>
#include <map>
#include <mutex>

#include "ssp/ssp_engine.h"

namespace ssp {

namespace {

struct EtaRow {
  long level;
  const char* text;
};

// principal moduli T_N
constexpr std::array<EtaRow, 14> kHauptmodulRows = {{
    {2, "1^24/2^24"},
    {3, "1^12/3^12"},
    {4, "1^8/4^8"},
    {5, "1^6/5^6"},
    {6, "2^8*3^4/1^4*6^8"},
    {7, "1^4/7^4"},
    {8, "1^4*4^2/2^2*8^4"},
    {9, "1^3/9^3"},
    {10, "2^4*5^2/1^2*10^4"},
    {12, "3^3*4^1/1^1*12^3"},
    {13, "1^2/13^2"},
    {16, "1^2*8^1/2^1*16^2"},
    {18, "2^2*9^1/1^1*18^2"},
    {25, "1/25"},
}};

// weight 12 forms Delta_N vanishing only at the infinite cusp
constexpr std::array<EtaRow, 15> kDeltaRows = {{
    {1, "1^24"},
    {2, "2^48/1^24"},
    {3, "3^36/1^12"},
    {4, "4^48/2^24"},
    {5, "5^30/1^6"},
    {6, "1^12*6^72/2^24*3^36"},
    {7, "7^28/1^4"},
    {8, "8^48/4^24"},
    {9, "9^36/3^12"},
    {10, "1^6*10^60/2^12*5^30"},
    {12, "2^12*12^72/4^24*6^36"},
    {13, "13^26/1^2"},
    {16, "16^48/8^24"},
    {18, "3^12*18^72/6^24*9^36"},
    {25, "25^30/5^6"},
}};

struct RelationRow {
  long level;
  const char* num;
  const char* den;
};

// j = num(T_N) / den(T_N)
constexpr std::array<RelationRow, 15> kRelationRows = {{
    {1, "T", "1"},
    {2, "(T+256)^3", "T^2"},
    {3, "(T+27)(T+243)^3", "T^3"},
    {4, "(T^2+256T+4096)^3", "(T+16)T^4"},
    {5, "(T^2+250T+3125)^3", "T^5"},
    {6, "(T+3)^3(T^3+225T^2-405T+243)^3", "(T-1)^2(T-9)^6T^3"},
    {7, "(T^2+13T+49)(T^2+245T+2401)^3", "T^7"},
    {8, "(T^4+256T^3+5120T^2+32768T+65536)^3", "(T+4)(T+8)^2T^8"},
    {9, "(T+9)^3(T^3+243T^2+2187T+6561)^3", "(T^2+9T+27)T^9"},
    {10, "(T^6+230T^5+275T^4-1500T^3+4375T^2-6250T+3125)^3", "(T-1)^2(T-5)^10T^5"},
    {12,
     "(T^2+4T-8)^3(T^6+228T^5-408T^4-128T^3-192T^2+768T-512)^3",
     "(T-2)(T-1)^3(T+2)^3(T-4)^12T^4"},
    {13, "(T^2+5T+13)(T^4+247T^3+3380T^2+15379T+28561)^3", "T^13"},
    {16,
     "(T^8+256T^7+5632T^6+53248T^5+282624T^4+917504T^3+1835008T^2+2097152T+1048576)^3",
     "(T+2)(T+4)^4(T^2+4T+8)T^16"},
    {18,
     "(T^3+3T^2-9T+9)^3(T^9+225T^8-1080T^7+3348T^6-8262T^5+16038T^4-23328T^3+26244T^2-"
     "19683T+6561)^3",
     "(T-1)^2T^9(T-3)^18(T^2-3T+3)(T^2+3)^2"},
    {25,
     "(T^10+250T^9+4375T^8+35000T^7+178125T^6+631250T^5+1640625T^4+3125000T^3+4296875T^2+"
     "3906250T+1953125)^3",
     "(T^4+5T^3+15T^2+25T+25)T^25"},
}};

struct GRow {
  long level;
  const char* delta_part;
  const char* epsilon_part;
};

// golden factorizations of the two g-polynomial parts
constexpr std::array<GRow, 15> kGRows = {{
    {1, "x", "(x-1728)"},
    {2, "(x+256)", "(x-512)(x+64)"},
    {3, "(x+27)(x+243)", "(x^2-486x-19683)"},
    {4, "(x^2+256x+4096)", "(x+32)(x^2-512x-8192)"},
    {5, "(x^2+250x+3125)", "(x^2-500x-15625)(x^2+22x+125)"},
    {6, "(x+3)(x^3+225x^2-405x+243)", "(x^2+18x-27)(x^4-540x^3+270x^2-972x+729)"},
    {7, "(x^2+13x+49)(x^2+245x+2401)", "(x^4-490x^3-21609x^2-235298x-823543)"},
    {8, "(x^4+256x^3+5120x^2+32768x+65536)", "(x^2+32x+128)(x^4-512x^3-10240x^2-65536x-131072)"},
    {9, "(x+9)(x^3+243x^2+2187x+6561)",
     "(x^6-486x^5-24057x^4-367416x^3-2657205x^2-9565938x-14348907)"},
    {10, "(x^6+230x^5+275x^4-1500x^3+4375x^2-6250x+3125)",
     "(x^2+2x+5)(x^2+20x-25)(x^4-540x^3+1350x^2-1500x+625)(x^2-2x+5)"},
    {12, "(x^2+4x-8)(x^6+228x^5-408x^4-128x^3-192x^2+768x-512)",
     "(x^4+20x^3-48x^2+32x-32)(x^8-536x^7-272x^6+3328x^5+6400x^4-20480x^3+4096x^2+16384x-8192)"},
    {13, "(x^2+5x+13)(x^4+247x^3+3380x^2+15379x+28561)",
     "(x^6-494x^5-20618x^4-237276x^3-1313806x^2-3712930x-4826809)(x^2+6x+13)"},
    {16,
     "(x^8+256x^7+5632x^6+53248x^5+282624x^4+917504x^3+1835008x^2+2097152x+1048576)",
     "(x^4+32x^3+192x^2+512x+512)"
     "(x^8-512x^7-11264x^6-106496x^5-565248x^4-1835008x^3-3670016x^2-4194304x-2097152)"},
    {18,
     "(x^3+3x^2-9x+9)(x^9+225x^8-1080x^7+3348x^6-8262x^5+16038x^4-23328x^3+26244x^2-19683x+6561)",
     "(x^6+18x^5-81x^4+216x^3-405x^2+486x-243)"
     "(x^12-540x^11+1890x^10-4212x^9+13527x^8-48600x^7+129276x^6-262440x^5+413343x^4-498636x^3+"
     "433026x^2-236196x+59049)"},
    {25,
     "(x^10+250x^9+4375x^8+35000x^7+178125x^6+631250x^5+1640625x^4+3125000x^3+4296875x^2+"
     "3906250x+1953125)",
     "(x^4+10x^3+45x^2+100x+125)(x^2+2x+5)"
     "(x^10-500x^9-18125x^8-163750x^7-871875x^6-3137500x^5-8203125x^4-15625000x^3-21484375x^2-"
     "19531250x-9765625)"},
}};

struct SSRow {
  long p;
  const char* factored;
};

// supersingular polynomials for X_0(2), factored over F_p
constexpr std::array<SSRow, 8> kLevel2SSRows = {{
    {5, "(x+1)"},
    {7, "(x+1)(x+6)"},
    {11, "(x+3)(x+5)(x+9)"},
    {13, "(x+1)(x^2+8x+1)"},
    {17, "(x+1)(x+16)(x^2+13x+16)"},
    {19, "(x+1)(x+7)(x+11)(x^2+9x+11)"},
    {23, "(x+3)(x+5)(x+15)(x+16)(x+17)(x+18)"},
    {29, "(x+16)(x+23)(x+24)(x^2+24x+16)(x^2+25x+23)"},
}};

template <typename Rows>
const auto* find_row(const Rows& rows, long level) {
  for (const auto& r : rows)
    if (r.level == level) return &r;
  return static_cast<decltype(&rows[0])>(nullptr);
}

std::vector<PrimePoly> parse_factor_list(long p, const char* text) {
  // split a factored string "(...)(...)" into monic factors mod p
  std::string s(text);
  std::vector<PrimePoly> out;
  size_t i = 0;
  while (i < s.size()) {
    size_t close = s.find(')', i);
    RationalPoly f = RationalPoly::parse(s.substr(i, close - i + 1));
    out.push_back(reduce_mod(f, p));
    i = close + 1;
  }
  return out;
}

}  // namespace

const std::vector<long>& supported_levels() {
  static const std::vector<long> levels = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
  return levels;
}

bool is_supported_level(long n) {
  for (long l : supported_levels())
    if (l == n) return true;
  return false;
}

const EtaQuotientSpec& hauptmodul_spec(long n) {
  static std::map<long, EtaQuotientSpec> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const EtaRow* row = find_row(kHauptmodulRows, n);
  if (!row)
    throw error(errc::unsupported_level,
                "no principal modulus for level " + std::to_string(n));
  return cache.emplace(n, EtaQuotientSpec::parse(row->text)).first->second;
}

const EtaQuotientSpec& delta_spec(long n) {
  static std::map<long, EtaQuotientSpec> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const EtaRow* row = find_row(kDeltaRows, n);
  if (!row) throw error(errc::unsupported_level, "no Delta_N for level " + std::to_string(n));
  EtaQuotientSpec spec = EtaQuotientSpec::parse(row->text);
  long wsum = spec.weight_sum();
  long exps = 0;
  for (auto [mult, d] : spec.factors) exps += d;
  if (exps != 24 || wsum % 24 != 0 || wsum <= 0)
    throw error(errc::fixture_mismatch, "Delta_N table row is not a weight 12 cusp-supported form");
  return cache.emplace(n, std::move(spec)).first->second;
}

long delta_valuation(long n) { return delta_spec(n).weight_sum() / 24; }

const ModularRelation& modular_relation(long n) {
  static std::map<long, ModularRelation> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const RelationRow* row = find_row(kRelationRows, n);
  if (!row)
    throw error(errc::unsupported_level, "no modular relation for level " + std::to_string(n));
  ModularRelation rel{n, RationalPoly::parse(row->num), RationalPoly::parse(row->den)};
  // data-entry guard: a bad row would poison every g-polynomial downstream
  if (!verify_relation(rel))
    throw error(errc::fixture_mismatch,
                "modular relation self-test failed for level " + std::to_string(n));
  return cache.emplace(n, std::move(rel)).first->second;
}

const GPolyFixture& g_poly_fixture(long n) {
  static std::map<long, GPolyFixture> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const GRow* row = find_row(kGRows, n);
  if (!row)
    throw error(errc::unsupported_level, "no g-polynomial row for level " + std::to_string(n));
  GPolyFixture fx;
  fx.level = n;
  // split on top-level parentheses; level 1 rows are bare monomials
  auto parse_factors = [](const char* text) {
    std::string s(text);
    std::vector<RationalPoly> out;
    if (s.find('(') == std::string::npos) {
      out.push_back(RationalPoly::parse(s));
      return out;
    }
    size_t i = 0;
    while (i < s.size()) {
      size_t close = s.find(')', i);
      out.push_back(RationalPoly::parse(s.substr(i, close - i + 1)));
      i = close + 1;
    }
    return out;
  };
  fx.delta_factors = parse_factors(row->delta_part);
  fx.epsilon_factors = parse_factors(row->epsilon_part);
  return cache.emplace(n, std::move(fx)).first->second;
}

const std::vector<SSPolyFixtureRow>& level2_ss_fixture() {
  static std::vector<SSPolyFixtureRow> rows = [] {
    std::vector<SSPolyFixtureRow> out;
    for (const auto& r : kLevel2SSRows)
      out.push_back({r.p, parse_factor_list(r.p, r.factored)});
    return out;
  }();
  return rows;
}

const GenusTableFixture& xp_genus_fixture() {
  static const GenusTableFixture fx = {
      {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0},
      {0, 0, 0, 0, 1, 1, 1, 0, 2, 1, 4, 3, 4, 1},
  };
  return fx;
}

}  // namespace ssp
