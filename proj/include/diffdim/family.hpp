#pragma once

#include <vector>

#include "diffdim/module.hpp"
#include "diffdim/numpoly.hpp"

namespace diffdim {

// Parameters of the chain system
//   d1^e1 m1 = 0,
//   d2^ek mk = d1^e(k+1) m(k+1)  (k = 1..n-1),
//   d2^en mn = 0.
struct ChainParams {
  int m = 2;
  std::vector<int> e; // n entries, all positive

  int n() const { return static_cast<int>(e.size()); }
  // throws InvalidArgument unless m >= 2, n >= 1 and every e_k >= 1
  void validate() const;
};

// the n+1 generators, constant coefficients
std::vector<ModuleElement> chain_system(const ChainParams& p);

// sum_{i <= k} e_i e_k, the coefficient sum_{|j|=2} e^j
mpz_class chain_quadratic_form(const std::vector<int>& e);

// (sum_{|j|=2} e^j) * C(s+m-2, m-2)
NumericalPolynomial chain_expected(const ChainParams& p);

// d1^(e1+...+ek) m_k for k = 2..n, the elements the critical-pair cascade produces
std::vector<ModuleElement> expected_characteristic_chain(const ChainParams& p);

} // namespace diffdim
