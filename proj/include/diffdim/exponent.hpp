#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace diffdim {

// Upper bound on the number of derivations (and of field variables x_i).
inline constexpr std::size_t kMaxVars = 8;

// A point of N_0^m. Coordinates beyond the ambient m are kept at zero, so the
// same value type serves exponents of derivative operators (d1^i1 ... dm^im)
// and monomials of the coefficient field (x1^i1 ... xm^im).
class Exponent {
public:
  using value_type = std::uint16_t;

  constexpr Exponent() = default;
  Exponent(std::initializer_list<int> coords);
  explicit Exponent(const std::vector<int>& coords);

  static Exponent unit(std::size_t i) {
    Exponent e;
    e.c_[i] = 1;
    return e;
  }

  value_type operator[](std::size_t i) const { return c_[i]; }
  value_type& operator[](std::size_t i) { return c_[i]; }

  int order() const {
    int s = 0;
    for (auto v : c_)
      s += v;
    return s;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](value_type v) { return v == 0; });
  }

  // componentwise <=, the partial order on N_0^m
  bool divides(const Exponent& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (c_[i] > other.c_[i])
        return false;
    return true;
  }

  Exponent& operator+=(const Exponent& o) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      c_[i] = static_cast<value_type>(c_[i] + o.c_[i]);
    return *this;
  }
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }

  // requires b.divides(a)
  friend Exponent operator-(Exponent a, const Exponent& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      a.c_[i] = static_cast<value_type>(a.c_[i] - b.c_[i]);
    return a;
  }

  friend Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      r.c_[i] = std::max(a.c_[i], b.c_[i]);
    return r;
  }

  friend Exponent gcd(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      r.c_[i] = std::min(a.c_[i], b.c_[i]);
    return r;
  }

  // lexicographic; used only for canonical container ordering
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;

  std::vector<int> coords(std::size_t m) const {
    return std::vector<int>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(m));
  }

  std::string to_string(std::size_t m) const;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : c_)
      h = (h ^ v) * 1099511628211ull;
    return h;
  }

private:
  std::array<value_type, kMaxVars> c_{};
};

// Graded reverse lexicographic comparison: true when a > b.
inline bool grevlex_greater(const Exponent& a, const Exponent& b) {
  const int da = a.order(), db = b.order();
  if (da != db)
    return da > db;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i])
      return a[i] < b[i];
  }
  return false;
}

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const { return e.hash(); }
};

} // namespace diffdim
