#pragma once

// Seeded random inputs shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <random>
#include <vector>

#include "diffdim/groebner.hpp"

namespace diffdim::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// m <= max_m, 1..max_size points, coordinates <= max_coord
inline ExponentSet random_exponent_set(std::mt19937_64& rng, int max_m, int max_size, int max_coord) {
  ExponentSet set;
  set.m = uniform(rng, 1, max_m);
  const int size = uniform(rng, 0, max_size);
  for (int k = 0; k < size; ++k) {
    Exponent e;
    for (int i = 0; i < set.m; ++i)
      e[static_cast<std::size_t>(i)] = static_cast<Exponent::value_type>(uniform(rng, 0, max_coord));
    set.elements.push_back(e);
  }
  return set;
}

// every exponent of order <= r in m variables
inline std::vector<Exponent> simplex(int m, int r) {
  std::vector<Exponent> out;
  Exponent x;
  for (;;) {
    if (x.order() <= r)
      out.push_back(x);
    int k = 0;
    for (; k < m; ++k) {
      if (++x[static_cast<std::size_t>(k)] <= r)
        break;
      x[static_cast<std::size_t>(k)] = 0;
    }
    if (k == m)
      return out;
  }
}

// Polynomial in x1..xm of total degree <= deg with coefficients in [-c, c].
inline Poly random_poly(std::mt19937_64& rng, int m, int deg, int c) {
  Poly p;
  for (const auto& e : simplex(m, deg))
    p += Poly::monomial(e, uniform(rng, -c, c));
  return p;
}

// Each term theta*m_j with ord theta <= max_order appears with probability
// 1/density; coefficients are integers in [-3, 3], and with `variable` a
// quarter of them are degree-1 polynomials instead.
inline ModuleElement random_element(std::mt19937_64& rng, int m, int n, int max_order, int density, bool variable) {
  ModuleElement f(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (const auto& theta : simplex(m, max_order)) {
      if (uniform(rng, 1, density) != 1)
        continue;
      RationalFunction a = variable && uniform(rng, 1, 4) == 1 ? RationalFunction(random_poly(rng, m, 1, 3))
                                                                : RationalFunction(uniform(rng, -3, 3));
      f[static_cast<std::size_t>(j)] += DiffOperator::monomial(theta, a);
    }
  return f;
}

inline std::vector<ModuleElement> random_system(std::mt19937_64& rng, int m, int n, int count, int max_order, int density,
                                                bool variable = false) {
  std::vector<ModuleElement> out;
  for (int k = 0; k < count; ++k)
    out.push_back(random_element(rng, m, n, max_order, density, variable));
  return out;
}

struct CorpusSystem {
  int m;
  int n;
  std::vector<ModuleElement> generators;
  SystemAnalysis analysis;
};

// Rank-0 systems with m <= 2, n <= 3, orders <= 2: n+1 constant-coefficient
// generators, each term present with probability 1/3.
inline std::vector<CorpusSystem> rank_zero_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusSystem> out;
  while (out.size() < count) {
    const int m = uniform(rng, 1, 2), n = uniform(rng, 1, 3);
    auto gens = random_system(rng, m, n, n + 1, 2, 3);
    SystemAnalysis a = analyze(gens, m, n);
    if (a.rank == 0)
      out.push_back({m, n, std::move(gens), std::move(a)});
  }
  return out;
}

// Systems of type m-1 with m = 2, n <= 3, orders <= 3, partly with degree-1
// polynomial coefficients.
inline std::vector<CorpusSystem> codim_one_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusSystem> out;
  while (out.size() < count) {
    const int m = 2, n = uniform(rng, 1, 3);
    // n equations in n unknowns are generically of type m-1
    auto gens = random_system(rng, m, n, n, 3, 6, true);
    for (auto& g : gens)
      if (g.is_zero())
        g = ModuleElement::term(static_cast<std::size_t>(n), 0, Exponent{1, 0});
    SystemAnalysis a = analyze(gens, m, n);
    if (a.type == m - 1)
      out.push_back({m, n, std::move(gens), std::move(a)});
  }
  return out;
}

} // namespace diffdim::testing
