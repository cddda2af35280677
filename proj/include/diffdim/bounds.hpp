#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "diffdim/groebner.hpp"

namespace diffdim {

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string to_string(CheckStatus s);

struct BoundCheck {
  std::string name;  // "kolchin_codim1", "new_codim2", "grigoriev", "bezout_single"
  CheckStatus status = CheckStatus::NotApplicable;
};

struct BoundReport {
  int m = 1;
  int n = 1;
  std::vector<int> e;
  int d = -1;
  mpz_class a_d;
  mpz_class kolchin_codim1;               // sum e_j
  std::optional<mpz_class> bezout_single; // e_1^2, n = 1 only
  mpz_class conjecture_codim2;            // sum_{i <= k} e_i e_k
  mpz_class new_codim2;                   // 2^(2m+2) (sum e_j)^2
  std::optional<mpz_class> grigoriev;     // n (4 m^2 n h)^(4^(m-d-1) 2(m-d)), 0 <= d < m
  std::vector<BoundCheck> checks;

  // every applicable check passed
  bool ok() const;
};

mpz_class conjecture_codim2(const std::vector<int>& e);
mpz_class new_codim2(int m, const std::vector<int>& e);
// requires 0 <= d < m
mpz_class grigoriev_bound(int m, int n, int d, int h);

// Throws OrderProfileTooSmall when some generator order exceeds e_j.
BoundReport bound_report(const SystemAnalysis& analysis, const std::vector<int>& e);

} // namespace diffdim
