#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "diffdim/bounds.hpp"
#include "diffdim/errors.hpp"
#include "diffdim/family.hpp"
#include "diffdim/groebner.hpp"
#include "diffdim/parser.hpp"
#include "diffdim/primitive.hpp"

namespace diffdim {

using json = nlohmann::ordered_json;

// integers that fit in 64 bits are numbers, larger ones decimal strings
json to_json(const mpz_class& z);
// {"std_coeffs": [...], "degree": d, "text": "..."}
json to_json(const NumericalPolynomial& p);
json to_json(const BoundReport& b);
json error_json(const std::exception& e);

json analysis_json(const SystemSource& src, const SystemAnalysis& a, const BoundReport& b);
std::string analysis_text(const SystemSource& src, const SystemAnalysis& a, const BoundReport& b);

json primitive_json(const SystemSource& src, const PrimitiveElementResult& r, const std::vector<DiffOperator>* annihilator);
std::string primitive_text(const SystemSource& src, const PrimitiveElementResult& r,
                           const std::vector<DiffOperator>* annihilator);

struct FamilyInstance {
  ChainParams params;
  NumericalPolynomial omega;
  NumericalPolynomial expected;
  bool match = false;
  double seconds = 0;
};

// timings are left out of the JSON so it stays byte-stable
json family_json(int m, int n, int emax, const std::vector<FamilyInstance>& rows);
std::string family_text(const std::vector<FamilyInstance>& rows);

struct OracleRow {
  long s;
  std::int64_t count;
  mpz_class omega_value;
  bool stable; // s >= threshold
};

json oracle_json(const ExponentSet& set, const ExponentSet& minimal, const DimensionPolynomial& dp,
                 const std::vector<OracleRow>& rows);
std::string oracle_text(const ExponentSet& minimal, const DimensionPolynomial& dp, const std::vector<OracleRow>& rows);

} // namespace diffdim
