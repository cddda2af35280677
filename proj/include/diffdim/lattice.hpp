#pragma once

#include <cstdint>
#include <vector>

#include "diffdim/exponent.hpp"
#include "diffdim/numpoly.hpp"

namespace diffdim {

// Finite subset E of N_0^m.
struct ExponentSet {
  int m = 1;
  std::vector<Exponent> elements;
};

struct DimensionPolynomial {
  NumericalPolynomial omega;
  // omega(s) = count_excluded(E, s) for every s >= threshold
  int threshold = 0;
};

// The <=-minimal elements of E, sorted and deduplicated.
ExponentSet minimize(const ExponentSet& set);

// Card V_E(s): points x with ord x <= s lying above no element of E.
// Brute-force enumeration; OpenMP-parallel over the first coordinate.
std::int64_t count_excluded(const ExponentSet& set, int s);

// omega_E by inclusion-exclusion over subsets T of the minimal elements:
//   omega_E(s) = sum_T (-1)^|T| C(s + m - ord(sup T), m).
// OpenMP-parallel over subsets.
DimensionPolynomial dimension_polynomial(const ExponentSet& set);

namespace serial {
// Single-threaded reference kernels kept for testing and benchmarking.
std::int64_t count_excluded(const ExponentSet& set, int s);
DimensionPolynomial dimension_polynomial(const ExponentSet& set);
} // namespace serial

} // namespace diffdim
