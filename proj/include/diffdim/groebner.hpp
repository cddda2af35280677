#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "diffdim/lattice.hpp"
#include "diffdim/module.hpp"
#include "diffdim/numpoly.hpp"

namespace diffdim {

// Reduced left Groebner basis of a submodule N of D^n.
struct GroebnerBasis {
  Ranking ranking;
  int m = 1;
  int n = 1;
  // monic, inter-reduced, sorted by increasing leading term
  std::vector<ModuleElement> elements;
  std::vector<int> lead_positions;
  std::vector<Exponent> lead_exponents;

  // E_1..E_n: leading exponents per position
  std::vector<ExponentSet> staircases() const;
};

// Normal form of f: no term of the result is divisible (same position,
// componentwise on theta) by a leading term of `basis`.
ModuleElement reduce(const ModuleElement& f, const std::vector<ModuleElement>& basis, const Ranking& ranking);
ModuleElement reduce(const ModuleElement& f, const GroebnerBasis& gb);

// While alive, Groebner computations on this thread throw BudgetExceeded
// once the time limit has passed. Scopes nest; the innermost one wins.
class TimeBudget {
public:
  explicit TimeBudget(std::chrono::milliseconds limit);
  ~TimeBudget();
  TimeBudget(const TimeBudget&) = delete;
  TimeBudget& operator=(const TimeBudget&) = delete;

  // throws BudgetExceeded when the innermost budget has run out
  static void check();

private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

// Buchberger completion over the Ore algebra. Zero generators are dropped
// with a warning.
GroebnerBasis groebner(const std::vector<ModuleElement>& generators, int m, int n,
                       const Ranking& ranking = Ranking());

struct SystemAnalysis {
  int m = 1;
  int n = 1;
  NumericalPolynomial omega;
  int type = -1;              // d = deg omega
  mpz_class typical_dimension; // a_d
  int codimension = 0;         // m - d
  mpz_class rank;              // a_m
  std::vector<ExponentSet> staircases;
  std::vector<int> thresholds;
  std::vector<int> orders;     // max ord_{m_j} over the input generators, -1 if absent
  GroebnerBasis basis;

  // omega(s) equals the Hilbert function for s >= this
  int stable_from() const;
};

SystemAnalysis analyze(const std::vector<ModuleElement>& generators, int m, int n,
                       const Ranking& ranking = Ranking());

// dim_F M_r / N_r = sum_j Card V_{E_j}(r)
std::int64_t hilbert_value(const GroebnerBasis& gb, int r);

} // namespace diffdim
