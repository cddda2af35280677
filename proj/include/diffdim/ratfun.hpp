#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffdim/poly.hpp"

namespace diffdim {

// Element of F = Q(x1..xm) with the derivations d/dx_i.
// Canonical form: gcd(num, den) = 1 and den monic under grevlex, so equality
// is structural. Zero is 0/1.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  RationalFunction(const mpq_class& c) : num_(c), den_(1) {}
  RationalFunction(long c) : RationalFunction(mpq_class(c)) {}
  RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}
  // throws DivisionByZero when den is zero
  RationalFunction(const Poly& num, const Poly& den);

  static RationalFunction variable(std::size_t i) { return RationalFunction(Poly::variable(i)); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  // value of a constant element
  mpq_class constant_value() const { return num_.constant_value(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction inverse() const;

  // d/dx_{var+1}
  RationalFunction derivative(std::size_t var) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "x1^2/x2", "(x1 + 1)/(x2 - 1)", "-3/2"
  std::string to_string(const std::vector<std::string>& names) const;
  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

  std::optional<std::uint64_t> eval_mod(const std::vector<std::uint64_t>& point,
                                        std::uint64_t p) const;

private:
  void normalize();

  Poly num_;
  Poly den_;
};

} // namespace diffdim
