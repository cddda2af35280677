#include "diffdim/family.hpp"

#include "diffdim/errors.hpp"

namespace diffdim {

namespace {

Exponent power(std::size_t i, int k) {
  Exponent e;
  e[i] = static_cast<Exponent::value_type>(k);
  return e;
}

} // namespace

void ChainParams::validate() const {
  if (m < 2 || m > static_cast<int>(kMaxVars))
    throw InvalidArgument("chain family needs 2 <= m <= 8");
  if (e.empty())
    throw InvalidArgument("chain family needs at least one indeterminate");
  for (int k : e)
    if (k < 1)
      throw InvalidArgument("chain family orders must be positive");
}

std::vector<ModuleElement> chain_system(const ChainParams& p) {
  p.validate();
  const auto n = static_cast<std::size_t>(p.n());
  std::vector<ModuleElement> out;
  out.push_back(ModuleElement::term(n, 0, power(0, p.e[0])));
  for (std::size_t k = 0; k + 1 < n; ++k)
    out.push_back(ModuleElement::term(n, k, power(1, p.e[k])) - ModuleElement::term(n, k + 1, power(0, p.e[k + 1])));
  out.push_back(ModuleElement::term(n, n - 1, power(1, p.e[n - 1])));
  return out;
}

mpz_class chain_quadratic_form(const std::vector<int>& e) {
  mpz_class total = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t k = i; k < e.size(); ++k)
      total += mpz_class(e[i]) * e[k];
  return total;
}

NumericalPolynomial chain_expected(const ChainParams& p) {
  p.validate();
  NumericalPolynomial omega = NumericalPolynomial::binomial(p.m - 2).scale(chain_quadratic_form(p.e));
  omega.set_m_cap(p.m);
  return omega;
}

std::vector<ModuleElement> expected_characteristic_chain(const ChainParams& p) {
  p.validate();
  const auto n = static_cast<std::size_t>(p.n());
  std::vector<ModuleElement> out;
  int partial = p.e[0];
  for (std::size_t k = 1; k < n; ++k) {
    partial += p.e[k];
    out.push_back(ModuleElement::term(n, k, power(0, partial)));
  }
  return out;
}

} // namespace diffdim
