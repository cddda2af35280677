#include "diffdim/bounds.hpp"

#include <algorithm>

#include "diffdim/errors.hpp"

namespace diffdim {

namespace {

mpz_class sum_of(const std::vector<int>& e) {
  mpz_class s = 0;
  for (int v : e)
    s += v;
  return s;
}

mpz_class power(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

CheckStatus check(bool holds) { return holds ? CheckStatus::Pass : CheckStatus::Fail; }

} // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass:
    return "pass";
  case CheckStatus::Fail:
    return "fail";
  case CheckStatus::NotApplicable:
    break;
  }
  return "n/a";
}

bool BoundReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.status == CheckStatus::Fail; });
}

mpz_class conjecture_codim2(const std::vector<int>& e) {
  mpz_class total = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t k = i; k < e.size(); ++k)
      total += mpz_class(e[i]) * e[k];
  return total;
}

mpz_class new_codim2(int m, const std::vector<int>& e) {
  const mpz_class s = sum_of(e);
  return power(2, static_cast<unsigned long>(2 * m + 2)) * s * s;
}

mpz_class grigoriev_bound(int m, int n, int d, int h) {
  if (d < 0 || d >= m)
    throw InvalidArgument("the Grigoriev bound needs 0 <= d < m");
  const unsigned long codim = static_cast<unsigned long>(m - d);
  // 4^(m-d-1) * 2(m-d)
  const unsigned long exp = (1ul << (2 * (codim - 1))) * 2 * codim;
  const mpz_class base = mpz_class(4) * m * m * n * h;
  return n * power(base, exp);
}

BoundReport bound_report(const SystemAnalysis& analysis, const std::vector<int>& e) {
  if (static_cast<int>(e.size()) != analysis.n)
    throw InvalidArgument("order profile has " + std::to_string(e.size()) + " entries for " +
                          std::to_string(analysis.n) + " indeterminates");
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] < 0)
      throw InvalidArgument("orders must be non-negative");
    if (j < analysis.orders.size() && analysis.orders[j] > e[j])
      throw OrderProfileTooSmall("a generator has order " + std::to_string(analysis.orders[j]) + " in m" +
                                 std::to_string(j + 1) + " but e" + std::to_string(j + 1) + " = " +
                                 std::to_string(e[j]));
  }

  BoundReport r;
  r.m = analysis.m;
  r.n = analysis.n;
  r.e = e;
  r.d = analysis.type;
  r.a_d = analysis.typical_dimension;
  r.kolchin_codim1 = sum_of(e);
  if (r.n == 1)
    r.bezout_single = mpz_class(e[0]) * e[0];
  r.conjecture_codim2 = conjecture_codim2(e);
  r.new_codim2 = new_codim2(r.m, e);
  const int h = e.empty() ? 0 : *std::max_element(e.begin(), e.end());
  if (r.d >= 0 && r.d < r.m)
    r.grigoriev = grigoriev_bound(r.m, r.n, r.d, h);

  const bool codim1 = r.d == r.m - 1;
  const bool codim2 = r.d == r.m - 2 && r.d >= 0;
  r.checks.push_back({"kolchin_codim1", codim1 ? check(r.a_d <= r.kolchin_codim1) : CheckStatus::NotApplicable});
  r.checks.push_back({"new_codim2", codim2 ? check(r.a_d <= r.new_codim2) : CheckStatus::NotApplicable});
  r.checks.push_back({"grigoriev", codim2 ? check(r.a_d <= *r.grigoriev) : CheckStatus::NotApplicable});
  r.checks.push_back(
      {"bezout_single", codim2 && r.n == 1 ? check(r.a_d <= *r.bezout_single) : CheckStatus::NotApplicable});
  return r;
}

} // namespace diffdim
