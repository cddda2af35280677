#pragma once

// Independent commutative module Buchberger over Q, test-only. Shares no code
// with the library: terms are (position, exponent) keys in a std::map, the
// order is reimplemented here.

#include <array>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

constexpr int kVars = 8;

struct Mono {
  int pos = 0;
  std::array<int, kVars> exp{};

  int degree() const {
    int d = 0;
    for (int v : exp)
      d += v;
    return d;
  }
};

// Total degree first, then the smaller position, then graded reverse
// lexicographic: the last differing exponent is smaller in the larger term.
struct Greater {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.degree() != b.degree())
      return a.degree() > b.degree();
    if (a.pos != b.pos)
      return a.pos < b.pos;
    for (int i = kVars - 1; i >= 0; --i)
      if (a.exp[i] != b.exp[i])
        return a.exp[i] < b.exp[i];
    return false;
  }
};

using Vec = std::map<Mono, mpq_class, Greater>;

// leading exponents of the reduced basis, grouped by position
std::vector<std::vector<std::array<int, kVars>>> staircases(std::vector<Vec> generators, int n);

} // namespace oracle
