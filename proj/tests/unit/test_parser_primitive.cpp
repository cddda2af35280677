#include <random>

#include "diffdim/family.hpp"
#include "diffdim/parser.hpp"
#include "diffdim/primitive.hpp"
#include "helpers.hpp"
#include "support/corpus.hpp"

using namespace diffdim;
using namespace diffdim::testing;

TEST_CASE("parser reads the chain system") {
  const SystemSource src =
      parse_system("vars x1 x2; unknowns y1 y2; eq d1^1 y1 = 0; eq d2 y1 - d1 y2 = 0; eq d2 y2 = 0;");
  CHECK(src.m() == 2);
  CHECK(src.n() == 2);
  CHECK(src.generators() == chain_system({2, {1, 1}}));
  CHECK(src.orders() == std::vector<int>{1, 1});
}

TEST_CASE("parser reads rational coefficients") {
  const SystemSource src = parse_system("eq (x1^2) * d1 y1 + (1/x2) * y1 = 0;");
  REQUIRE(src.equations.size() == 1);
  const ModuleElement expected = mt(1, 1, Exponent{1, 0}, x(1) * x(1)) + mt(1, 1, Exponent{}, x(2).inverse());
  CHECK(src.generators()[0] == expected);
}

TEST_CASE("parser applies derivations to the factors on their right") {
  // d1 (x1 y1) = y1 + x1 d1 y1
  const SystemSource src = parse_system("vars x1; unknowns y1; eq d1 x1 y1 = 0;");
  CHECK(src.generators()[0] == mt(1, 1, Exponent{}) + mt(1, 1, Exponent{1}, x(1)));
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_system("eq (d1 y1) * (d2 y1) = 0;"), NonlinearTerm);
  CHECK_THROWS_AS(parse_system("vars x1; unknowns y1; eq d1 z = 0;"), UnknownSymbol);
  CHECK_THROWS_AS(parse_system("vars x1; unknowns y1; eq d2 y1 = 0;"), UnknownSymbol);
  try {
    parse_system("vars x1;\nunknowns y1;\neq d1 y1 = $;");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 12);
  }
}

TEST_CASE("rendering round-trips") {
  for (const char* text : {"vars x1 x2; unknowns y1 y2; eq d1 y1 = 0; eq d2 y1 - d1 y2 = 0; eq d2 y2 = 0;",
                           "eq (x1^2) * d1 y1 + (1/x2) * y1 = 0;",
                           "vars x; unknowns u v; orders 2 1; eq d1^2 u - (x + 1) * v = x^3; eq d1 v = 0;"}) {
    const SystemSource src = parse_system(text);
    CHECK(parse_system(render_system(src)) == src);
  }
}

TEST_CASE("independent subsystem") {
  const auto kept = select_independent_subsystem(
      {mt(2, 1, Exponent{1}), mt(2, 1, Exponent{2}), mt(2, 2, Exponent{1})}, 1, 2);
  CHECK(kept == std::vector<std::size_t>{0, 2});
  CHECK(select_independent_subsystem({mt(2, 1, Exponent{1}), mt(2, 2, Exponent{1})}, 1, 2).size() == 2);
  CHECK_THROWS_AS(select_independent_subsystem({mt(2, 1, Exponent{1})}, 1, 2), NotZeroRank);
}

TEST_CASE("prolonged system") {
  const std::vector<ModuleElement> sys = {mt(2, 1, Exponent{1}), mt(2, 2, Exponent{1})};
  const LinearSystem s0 = prolong(sys, {x(1)}, 0, 1, 2);
  CHECK(s0.equations.size() == 3);
  const LinearSystem s1 = prolong(sys, {x(1)}, 1, 1, 2);
  CHECK(s1.equations.size() == 6);
  // the d psi row reads d m1 + x d m2 + m2
  const auto& last = s1.equations.back();
  CHECK(last.psi_row);
  std::vector<std::pair<std::pair<int, Exponent>, RationalFunction>> lhs;
  for (const auto& entry : last.lhs)
    lhs.emplace_back(s1.unknowns[entry.index], entry.value);
  CHECK(lhs.size() == 3);
  for (const auto& [unknown, value] : lhs) {
    if (unknown == std::pair<int, Exponent>{0, Exponent{1}})
      CHECK(value == RationalFunction(1));
    else if (unknown == std::pair<int, Exponent>{1, Exponent{1}})
      CHECK(value == x(1));
    else
      CHECK((unknown == std::pair<int, Exponent>{1, Exponent{}} && value == RationalFunction(1)));
  }
}

TEST_CASE("primitive element of two first-order equations") {
  const std::vector<ModuleElement> sys = {mt(2, 1, Exponent{1}), mt(2, 2, Exponent{1})};
  const auto lambdas = solve_for_generators(prolong(sys, {x(1)}, 1, 1, 2));
  REQUIRE(lambdas);
  CHECK((*lambdas)[1] == d(1));
  CHECK((*lambdas)[0] == DiffOperator(1) - DiffOperator(x(1)) * d(1));
  // a constant c2 leaves m1 and m2 undetermined at every order
  for (int s = 0; s <= 3; ++s)
    CHECK_FALSE(solve_for_generators(prolong(sys, {RationalFunction(2)}, s, 1, 2)));

  const PrimitiveElementResult r = primitive_element(sys, 1, 2);
  CHECK(r.verified);
  CHECK(verify_primitive(sys, r));
  CHECK(r.order_cap == 4);
  for (const auto& l : r.lambdas)
    CHECK(l.order() <= 4);
}

TEST_CASE("a single unknown is its own primitive element") {
  const PrimitiveElementResult r = primitive_element({mt(1, 1, Exponent{2, 0}), mt(1, 1, Exponent{0, 3})}, 2, 1);
  CHECK(r.s_used == 0);
  REQUIRE(r.lambdas.size() == 1);
  CHECK(r.lambdas[0] == DiffOperator(1));
  const auto j = annihilator_generators({mt(1, 1, Exponent{3, 0})}, primitive_element({mt(1, 1, Exponent{3, 0})}, 1, 1));
  CHECK(j == std::vector<DiffOperator>{d(1, 3)});
}

TEST_CASE("annihilator of the first-order pair") {
  const std::vector<ModuleElement> sys = {mt(2, 1, Exponent{1}), mt(2, 2, Exponent{1})};
  const PrimitiveElementResult r = primitive_element(sys, 1, 2);
  std::vector<ModuleElement> j;
  for (const auto& op : annihilator_generators(sys, r)) {
    CHECK(op.order() <= 2 * 4);
    j.emplace_back(std::vector<DiffOperator>{op});
  }
  const SystemAnalysis a = analyze(j, 1, 1);
  CHECK(reduce(ModuleElement(std::vector<DiffOperator>{d(1, 2)}), a.basis).is_zero());
  CHECK(a.omega == analyze(sys, 1, 2).omega);
}

TEST_CASE("primitive elements on a random rank-0 corpus") {
  for (const auto& c : rank_zero_corpus(41, 6)) {
    const PrimitiveElementResult r = primitive_element(c.generators, c.m, c.n);
    CHECK(r.verified);
    for (const auto& l : r.lambdas)
      CHECK(l.order() <= r.order_cap);
    // the relations vanish on psi
    for (const auto& rel : psi_relations(c.generators, r)) {
      ModuleElement image(static_cast<std::size_t>(c.n));
      for (std::size_t k = 0; k < static_cast<std::size_t>(c.n); ++k)
        image[k] = rel * (k == 0 ? DiffOperator(1) : DiffOperator(r.c[k - 1]));
      CHECK(reduce(image, c.analysis.basis).is_zero());
    }
  }
  // m1 is free: d m1 - m2 leaves rank 1
  CHECK_THROWS_AS(primitive_element({mt(2, 1, Exponent{1}) - mt(2, 2, Exponent{})}, 1, 2), NotZeroRank);
}
