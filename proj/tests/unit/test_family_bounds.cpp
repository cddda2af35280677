#include <random>

#include "diffdim/bounds.hpp"
#include "diffdim/family.hpp"
#include "helpers.hpp"
#include "support/corpus.hpp"

using namespace diffdim;
using namespace diffdim::testing;

namespace {

CheckStatus status(const BoundReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name)
      return c.status;
  FAIL("missing check " << name);
  return CheckStatus::NotApplicable;
}

} // namespace

TEST_CASE("chain system generators") {
  const std::vector<ModuleElement> expected = {mt(2, 1, Exponent{1, 0}),
                                               mt(2, 1, Exponent{0, 1}) - mt(2, 2, Exponent{1, 0}),
                                               mt(2, 2, Exponent{0, 1})};
  CHECK(chain_system({2, {1, 1}}) == expected);
  CHECK(chain_system({2, {2}}) == std::vector<ModuleElement>{mt(1, 1, Exponent{2, 0}), mt(1, 1, Exponent{0, 2})});
  // a third derivation leaves the generators unchanged
  CHECK(chain_system({3, {1, 2}}) == chain_system({2, {1, 2}}));
  CHECK_THROWS_AS(chain_system({1, {1}}), InvalidArgument);
  CHECK_THROWS_AS(chain_system({2, {0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(chain_system({2, {}}), InvalidArgument);
}

TEST_CASE("chain closed form") {
  CHECK(chain_expected({2, {1, 1}}).std_coeffs() == zs({3}));
  CHECK(chain_expected({2, {2, 3}}).std_coeffs() == zs({19}));
  CHECK(chain_expected({3, {1, 1}}) == NumericalPolynomial::binomial(1).scale(3));
  CHECK(chain_quadratic_form({1, 2, 3}) == 1 + 2 + 3 + 4 + 6 + 9);
}

TEST_CASE("characteristic chain") {
  CHECK(expected_characteristic_chain({2, {1, 1}}) == std::vector<ModuleElement>{mt(2, 2, Exponent{2, 0})});
  CHECK(expected_characteristic_chain({2, {1, 2, 3}}) ==
        std::vector<ModuleElement>{mt(3, 2, Exponent{3, 0}), mt(3, 3, Exponent{6, 0})});
  CHECK(expected_characteristic_chain({2, {4}}).empty());
  // every chain element lies in the submodule
  for (const auto& p : std::vector<ChainParams>{{2, {1, 1}}, {2, {2, 3}}, {2, {1, 2, 3}}, {3, {2, 1}}}) {
    const GroebnerBasis gb = groebner(chain_system(p), p.m, p.n());
    for (const auto& f : expected_characteristic_chain(p))
      CHECK(reduce(f, gb).is_zero());
  }
}

TEST_CASE("two derivations reproduce the closed form") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const ChainParams p{2, {a, b}};
      CHECK(analyze(chain_system(p), 2, 2).omega == chain_expected(p));
    }
}

TEST_CASE("bound report on the chain with e = (2,3)") {
  const SystemAnalysis a = analyze(chain_system({2, {2, 3}}), 2, 2);
  const BoundReport r = bound_report(a, {2, 3});
  CHECK(r.a_d == 19);
  CHECK(r.conjecture_codim2 == 19);
  CHECK(r.new_codim2 == 1600);
  CHECK(status(r, "new_codim2") == CheckStatus::Pass);
  CHECK(status(r, "kolchin_codim1") == CheckStatus::NotApplicable);
  CHECK(r.ok());
}

TEST_CASE("single equation bounds") {
  const SystemAnalysis bez = analyze({mt(1, 1, Exponent{5, 0}), mt(1, 1, Exponent{0, 5})}, 2, 1);
  const BoundReport r = bound_report(bez, {5});
  CHECK(r.a_d == 25);
  CHECK(*r.bezout_single == 25);
  CHECK(status(r, "bezout_single") == CheckStatus::Pass);

  const SystemAnalysis k = analyze({mt(1, 1, Exponent{1, 0})}, 2, 1);
  const BoundReport rk = bound_report(k, {1});
  CHECK(rk.a_d == 1);
  CHECK(status(rk, "kolchin_codim1") == CheckStatus::Pass);

  CHECK_THROWS_AS(bound_report(bez, {4}), OrderProfileTooSmall);
  CHECK_THROWS_AS(bound_report(bez, {5, 5}), InvalidArgument);
}

TEST_CASE("bound formulas are ordered") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const int m = uniform(rng, 2, 5);
    std::vector<int> e(static_cast<std::size_t>(uniform(rng, 1, 5)));
    for (auto& v : e)
      v = uniform(rng, 1, 30);
    mpz_class total = 0;
    for (int v : e)
      total += v;
    CHECK(conjecture_codim2(e) <= total * total);
    CHECK(total * total <= new_codim2(m, e));
  }
  // n (4 m^2 n h)^(4^(m-d-1) 2(m-d)) with m = 2, n = h = 1, d = 0 is 16^16
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 16, 16);
  CHECK(grigoriev_bound(2, 1, 0, 1) == expected);
}

TEST_CASE("counting inequality") {
  for (int m = 1; m <= 3; ++m)
    for (int e1 = 1; e1 <= 4; ++e1)
      for (int e2 = 1; e2 <= 4; ++e2) {
        const long s = (1L << m) * (e1 + e2);
        CHECK(choose(s + e1 + m, m) + choose(s + e2 + m, m) <= 3 * choose(s + m, m));
      }
}
