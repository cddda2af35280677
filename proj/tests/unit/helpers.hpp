#pragma once

#include <doctest.h>

#include "diffdim/errors.hpp"
#include "diffdim/groebner.hpp"

namespace diffdim::testing {

// 1-based shorthands matching the usual notation
inline RationalFunction x(std::size_t i) { return RationalFunction::variable(i - 1); }
inline DiffOperator d(std::size_t i) { return DiffOperator::derivation(i - 1); }
// d_i^k
inline DiffOperator d(std::size_t i, int k) {
  Exponent theta;
  theta[i - 1] = static_cast<Exponent::value_type>(k);
  return DiffOperator::monomial(theta, 1);
}

// theta * m_j (j 1-based) in D^n
inline ModuleElement mt(std::size_t n, std::size_t j, const Exponent& theta, const RationalFunction& a = 1) {
  return ModuleElement::term(n, j - 1, theta, a);
}

inline std::vector<mpz_class> zs(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long c : v)
    out.emplace_back(c);
  return out;
}

} // namespace diffdim::testing
