#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "diffdim/family.hpp"
#include "diffdim/parser.hpp"
#include "helpers.hpp"
#include "oracle/commutative_gb.hpp"
#include "support/corpus.hpp"

using namespace diffdim;
using namespace diffdim::testing;

namespace {

SystemSource fixture(const std::string& name) {
  std::ifstream in(std::string(DIFFDIM_FIXTURES) + "/" + name);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

NumericalPolynomial omega_of(const SystemSource& src, const Ranking& ranking = Ranking()) {
  return analyze(src.generators(), src.m(), src.n(), ranking).omega;
}

} // namespace

TEST_CASE("reduction examples") {
  const Ranking r;
  CHECK(reduce(mt(1, 1, Exponent{1, 0}), {mt(1, 1, Exponent{1, 0})}, r).is_zero());
  const ModuleElement g = mt(2, 1, Exponent{0, 1}) - mt(2, 2, Exponent{1, 0});
  CHECK(reduce(mt(2, 1, Exponent{1, 1}), {g}, r) == mt(2, 2, Exponent{2, 0}));
  CHECK(reduce(mt(2, 2, Exponent{}), {mt(2, 1, Exponent{1, 0})}, r) == mt(2, 2, Exponent{}));
}

TEST_CASE("chain system with e = (1,1)") {
  const auto gens = chain_system({2, {1, 1}});
  const GroebnerBasis gb = groebner(gens, 2, 2);
  CHECK(std::find(gb.elements.begin(), gb.elements.end(), mt(2, 2, Exponent{2, 0})) != gb.elements.end());
  const SystemAnalysis a = analyze(gens, 2, 2);
  CHECK(a.omega.std_coeffs() == zs({3}));
  CHECK(a.type == 0);
  CHECK(a.typical_dimension == 3);
  CHECK(a.codimension == 2);
  CHECK(a.rank == 0);
  CHECK(hilbert_value(a.basis, 20) == 3);
}

TEST_CASE("small analyses") {
  const SystemAnalysis empty = analyze({}, 2, 1);
  CHECK(empty.omega == NumericalPolynomial::binomial(2));
  CHECK(empty.type == 2);
  CHECK(empty.rank == 1);
  CHECK(hilbert_value(empty.basis, 2) == 6);

  const SystemAnalysis single = analyze({mt(1, 1, Exponent{1, 0})}, 2, 1);
  CHECK(single.omega == NumericalPolynomial::binomial(1));
  CHECK(single.codimension == 1);
  CHECK(hilbert_value(single.basis, 3) == 4);

  const GroebnerBasis one = groebner({mt(1, 1, Exponent{2, 1})}, 2, 1);
  REQUIRE(one.elements.size() == 1);
  CHECK(one.elements[0] == mt(1, 1, Exponent{2, 1}));

  // zero module
  const SystemAnalysis zero = analyze({mt(1, 1, Exponent{})}, 2, 1);
  CHECK(zero.omega.is_zero());
  CHECK(zero.type == -1);
  CHECK(zero.codimension == 3);
}

TEST_CASE("fixtures") {
  CHECK(omega_of(fixture("chain_11.sys")).std_coeffs() == zs({3}));
  CHECK(omega_of(fixture("bezout5.sys")).std_coeffs() == zs({25}));
  CHECK(omega_of(fixture("ode2.sys")).std_coeffs() == zs({2}));
  CHECK(omega_of(fixture("connection.sys")).std_coeffs() == zs({1}));
  CHECK(omega_of(fixture("rational.sys")).is_zero());
}

TEST_CASE("Hilbert function agrees with omega past the thresholds") {
  for (const auto& c : codim_one_corpus(21, 8))
    for (int r = c.analysis.stable_from(); r <= c.analysis.stable_from() + 3; ++r)
      CHECK(hilbert_value(c.analysis.basis, r) == c.analysis.omega.evaluate(r));
}

TEST_CASE("omega does not depend on the generating set") {
  std::mt19937_64 rng(22);
  for (const auto& c : codim_one_corpus(23, 6)) {
    auto more = c.generators;
    // add D-combinations of the generators
    for (int k = 0; k < 2; ++k) {
      ModuleElement extra(static_cast<std::size_t>(c.n));
      for (const auto& g : c.generators)
        extra += DiffOperator::monomial(Exponent{uniform(rng, 0, 1), uniform(rng, 0, 1)}, uniform(rng, -2, 2)) * g;
      more.push_back(extra);
    }
    CHECK(analyze(more, c.m, c.n).omega == c.analysis.omega);
  }
}

TEST_CASE("omega does not depend on the ranking") {
  const Ranking top(Ranking::Kind::DegRevLexTermFirst);
  for (const auto& c : codim_one_corpus(24, 6))
    CHECK(analyze(c.generators, c.m, c.n, top).omega == c.analysis.omega);
  for (const char* name : {"chain_11.sys", "bezout5.sys", "connection.sys", "rational.sys"})
    CHECK(omega_of(fixture(name), top) == omega_of(fixture(name)));
  CHECK(Ranking::parse("degrevlex-top").kind() == Ranking::Kind::DegRevLexTermFirst);
  CHECK_THROWS_AS(Ranking::parse("lex"), InvalidArgument);
}

TEST_CASE("basis elements reduce to zero and the basis is reduced") {
  for (const auto& c : codim_one_corpus(25, 5)) {
    const GroebnerBasis& gb = c.analysis.basis;
    for (const auto& g : c.generators)
      CHECK(reduce(g, gb).is_zero());
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
      std::vector<ModuleElement> others = gb.elements;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK(reduce(gb.elements[i], others, gb.ranking) == gb.elements[i]);
    }
  }
}

TEST_CASE("constant-coefficient staircases match the commutative oracle") {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 25; ++k) {
    const int m = uniform(rng, 1, 3), n = uniform(rng, 1, 2);
    const auto gens = random_system(rng, m, n, uniform(rng, 1, n + 1), 2, 3);
    std::vector<oracle::Vec> input;
    for (const auto& g : gens) {
      oracle::Vec v;
      for (std::size_t j = 0; j < g.size(); ++j)
        for (const auto& t : g[j].terms()) {
          oracle::Mono key;
          key.pos = static_cast<int>(j);
          for (int i = 0; i < oracle::kVars; ++i)
            key.exp[static_cast<std::size_t>(i)] = t.theta[static_cast<std::size_t>(i)];
          v[key] = t.coeff.constant_value();
        }
      input.push_back(v);
    }
    const auto expected = oracle::staircases(input, n);
    const auto sets = groebner(gens, m, n).staircases();
    for (int j = 0; j < n; ++j) {
      std::vector<std::array<int, oracle::kVars>> got;
      for (const auto& e : minimize(sets[static_cast<std::size_t>(j)]).elements) {
        std::array<int, oracle::kVars> a{};
        for (int i = 0; i < oracle::kVars; ++i)
          a[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
        got.push_back(a);
      }
      std::sort(got.begin(), got.end());
      CHECK(got == expected[static_cast<std::size_t>(j)]);
    }
  }
}

TEST_CASE("time budget interrupts a long completion") {
  // the deadline has passed before the first reduction step
  const auto gens = chain_system({3, {6, 7, 8}});
  TimeBudget budget(std::chrono::milliseconds(1));
  std::this_thread::sleep_for(std::chrono::milliseconds(2));
  CHECK_THROWS_AS(groebner(gens, 3, 3), BudgetExceeded);
}

TEST_CASE("time budgets nest and restore") {
  {
    TimeBudget outer(std::chrono::hours(1));
    {
      TimeBudget inner(std::chrono::milliseconds(0));
      CHECK_THROWS_AS(TimeBudget::check(), BudgetExceeded);
    }
    CHECK_NOTHROW(TimeBudget::check());
  }
  CHECK_NOTHROW(TimeBudget::check());
}
