#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "diffdim/groebner.hpp"
#include "diffdim/module.hpp"

namespace diffdim {

// max_f ord_{m_j} f over the generators (-1 where m_j never occurs)
std::vector<int> order_profile(const std::vector<ModuleElement>& generators, int n);

// Greedy scan keeping a generator whenever it lowers the rank a_m of the
// quotient. Returns indices into `generators`. Throws NotZeroRank when the
// full system has positive rank.
std::vector<std::size_t> select_independent_subsystem(const std::vector<ModuleElement>& generators, int m, int n);

// The prolonged system: unknowns theta*m_j with ord theta <= s + e_j, equations
//   theta F_i = 0                             (ord theta <= s)
//   theta (m_1 + c_2 m_2 + ... + c_n m_n) = theta psi   (ord theta <= s)
// with theta pushed through c_j by the Leibniz rule.
struct LinearSystem {
  struct Entry {
    std::size_t index;
    RationalFunction value;
  };
  struct Equation {
    std::vector<Entry> lhs; // over `unknowns`, sorted by index
    std::vector<Entry> rhs; // over `psi_symbols`, sorted by index
    bool psi_row = false;
  };

  int m = 1;
  int n = 1;
  int s = 0;
  std::vector<int> orders;                          // e_j used for the unknown window
  std::vector<std::pair<int, Exponent>> unknowns;   // (j, theta), decreasing ranking
  std::vector<Exponent> psi_symbols;                // theta with ord <= s
  std::vector<Equation> equations;                  // all theta F_i rows, then psi rows

  std::size_t index_of(int j, const Exponent& theta) const;
};

// `c` holds c_2..c_n
LinearSystem prolong(const std::vector<ModuleElement>& subsystem, const std::vector<RationalFunction>& c, int s,
                     int m, int n);

// Outcome of eliminating a prolonged system: lambda_j with m_j = lambda_j psi,
// or nothing when some m_j is not determined.
std::optional<std::vector<DiffOperator>> solve_for_generators(const LinearSystem& system);

// Same pivot test over Z/p with x specialized to `point`; no lambdas.
// nullopt when an entry is undefined at the point.
std::optional<bool> generators_determined_mod_p(const LinearSystem& system, const std::vector<std::uint64_t>& point,
                                                std::uint64_t p);

struct PrimitiveOptions {
  std::uint64_t seed = 7;
  int retries = 8;
  // screen each s over Z/p before running the exact elimination
  bool modular_screen = true;
  // when the independent subsystem leaves some m_j undetermined at order s,
  // retry that s with every generator of N
  bool full_system_fallback = true;
};

struct PrimitiveElementResult {
  int m = 1;
  int n = 1;
  std::vector<RationalFunction> c; // c_2..c_n
  ModuleElement psi_definition;     // m_1 + sum c_j m_j
  std::vector<DiffOperator> lambdas;
  int s_used = 0;
  mpz_class order_cap;              // 2^m * sum e_j
  std::vector<int> orders;          // e_j of the full system
  std::vector<std::size_t> subsystem;
  int attempts = 0;
  bool full_system = false;         // the successful prolongation used all generators
  bool verified = false;
};

// lambda_j * psi_def - m_j reduces to zero modulo N for every j
bool verify_primitive(const std::vector<ModuleElement>& generators, const PrimitiveElementResult& result,
                      const Ranking& ranking = Ranking());

// Throws NotZeroRank or RetriesExhausted.
PrimitiveElementResult primitive_element(const std::vector<ModuleElement>& generators, int m, int n,
                                         const PrimitiveOptions& options = {});

// Relations sum r_theta theta psi = 0 produced by eliminating the prolonged
// system at the successful order, independent over F.
std::vector<DiffOperator> psi_relations(const std::vector<ModuleElement>& generators,
                                        const PrimitiveElementResult& result);

// Generators of the annihilator J of psi: the direct relations, every
// original generator with m_j replaced by lambda_j psi, and
// 1 - sum c_j lambda_j. Zero operators are omitted.
std::vector<DiffOperator> annihilator_generators(const std::vector<ModuleElement>& generators,
                                                 const PrimitiveElementResult& result);

} // namespace diffdim
