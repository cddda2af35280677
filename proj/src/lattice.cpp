#include "diffdim/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace diffdim {

namespace {

bool excluded(const std::vector<Exponent>& minimal, const Exponent& x) {
  for (const auto& e : minimal)
    if (e.divides(x))
      return true;
  return false;
}

// number of points of V_E(s) whose first coordinates are fixed in `x` up to `k`
std::int64_t count_from(const std::vector<Exponent>& minimal, int m, Exponent& x, int k, int budget) {
  if (k == m)
    return excluded(minimal, x) ? 0 : 1;
  std::int64_t total = 0;
  for (int v = 0; v <= budget; ++v) {
    x[static_cast<std::size_t>(k)] = static_cast<Exponent::value_type>(v);
    total += count_from(minimal, m, x, k + 1, budget - v);
  }
  x[static_cast<std::size_t>(k)] = 0;
  return total;
}

int threshold_of(const ExponentSet& set) {
  Exponent top;
  for (const auto& e : set.elements)
    top = lcm(top, e);
  return top.order();
}

void check_dims(const ExponentSet& set) {
  if (set.m < 1 || set.m > static_cast<int>(kMaxVars))
    throw std::invalid_argument("exponent set dimension out of range");
}

// bucket[k] = sum over subsets T with ord(sup T) = k of (-1)^|T|
DimensionPolynomial assemble(const std::vector<std::int64_t>& bucket, const ExponentSet& set) {
  NumericalPolynomial omega;
  for (std::size_t k = 0; k < bucket.size(); ++k)
    if (bucket[k] != 0)
      omega += NumericalPolynomial::shifted_binomial(set.m, static_cast<int>(k))
                   .scale(mpz_class(static_cast<long>(bucket[k])));
  omega.set_m_cap(set.m);
  return {omega, threshold_of(set)};
}

Exponent sup_of(const std::vector<Exponent>& minimal, std::uint64_t mask) {
  Exponent sup;
  for (std::size_t i = 0; i < minimal.size(); ++i)
    if (mask & (std::uint64_t{1} << i))
      sup = lcm(sup, minimal[i]);
  return sup;
}

} // namespace

ExponentSet minimize(const ExponentSet& set) {
  std::vector<Exponent> sorted = set.elements;
  std::sort(sorted.begin(), sorted.end(),
            [](const Exponent& a, const Exponent& b) { return a.order() < b.order() || (a.order() == b.order() && a < b); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  ExponentSet out{set.m, {}};
  for (const auto& e : sorted)
    if (!excluded(out.elements, e))
      out.elements.push_back(e);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::int64_t count_excluded(const ExponentSet& set, int s) {
  check_dims(set);
  if (s < 0)
    return 0;
  const auto minimal = minimize(set).elements;
  const int m = set.m;
  std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (int v = 0; v <= s; ++v) {
    Exponent x;
    x[0] = static_cast<Exponent::value_type>(v);
    total += count_from(minimal, m, x, 1, s - v);
  }
  return total;
}

DimensionPolynomial dimension_polynomial(const ExponentSet& set) {
  check_dims(set);
  const auto minimal = minimize(set).elements;
  if (minimal.size() >= 63)
    throw std::length_error("staircase too large for inclusion-exclusion");
  const int max_order = threshold_of(set);
  const std::uint64_t subsets = std::uint64_t{1} << minimal.size();
  std::vector<std::int64_t> bucket(static_cast<std::size_t>(max_order) + 1, 0);

#pragma omp parallel
  {
    std::vector<std::int64_t> local(bucket.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(subsets); ++mask) {
      const auto um = static_cast<std::uint64_t>(mask);
      local[static_cast<std::size_t>(sup_of(minimal, um).order())] += (__builtin_popcountll(um) % 2) ? -1 : 1;
    }
#pragma omp critical
    for (std::size_t k = 0; k < bucket.size(); ++k)
      bucket[k] += local[k];
  }
  return assemble(bucket, set);
}

namespace serial {

std::int64_t count_excluded(const ExponentSet& set, int s) {
  check_dims(set);
  if (s < 0)
    return 0;
  const auto minimal = minimize(set).elements;
  Exponent x;
  return count_from(minimal, set.m, x, 0, s);
}

DimensionPolynomial dimension_polynomial(const ExponentSet& set) {
  check_dims(set);
  const auto minimal = minimize(set).elements;
  if (minimal.size() >= 63)
    throw std::length_error("staircase too large for inclusion-exclusion");
  std::vector<std::int64_t> bucket(static_cast<std::size_t>(threshold_of(set)) + 1, 0);
  const std::uint64_t subsets = std::uint64_t{1} << minimal.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask)
    bucket[static_cast<std::size_t>(sup_of(minimal, mask).order())] += (__builtin_popcountll(mask) % 2) ? -1 : 1;
  return assemble(bucket, set);
}

} // namespace serial

} // namespace diffdim
