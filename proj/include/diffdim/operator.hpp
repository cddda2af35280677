#pragma once

#include <string>
#include <vector>

#include "diffdim/exponent.hpp"
#include "diffdim/ratfun.hpp"

namespace diffdim {

// Element sum_theta a_theta * d^theta of D = F[d1..dm], coefficients on the
// left, with the commutation rule d_i a = a d_i + d_i(a).
class DiffOperator {
public:
  struct Term {
    Exponent theta;
    RationalFunction coeff;
  };

  DiffOperator() = default;
  DiffOperator(const RationalFunction& a);

  static DiffOperator derivation(std::size_t i);
  static DiffOperator monomial(const Exponent& theta, const RationalFunction& a);
  // canonicalizes: sorts by decreasing grevlex, merges, drops zeros
  static DiffOperator from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  // max ord of the support, -1 for zero
  int order() const;
  bool has_constant_coefficients() const;
  const std::vector<Term>& terms() const { return terms_; }
  RationalFunction coeff(const Exponent& theta) const;

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  DiffOperator operator-() const;

  // a * this, multiplication from the left by a field element
  DiffOperator scaled(const RationalFunction& a) const;

  friend DiffOperator operator*(const DiffOperator& f, const DiffOperator& g);

  // the ring action on F: sum a_theta * theta(a)
  RationalFunction apply(const RationalFunction& a) const;

  friend bool operator==(const DiffOperator& a, const DiffOperator& b);

  // "(x1^2/x2)*d1^2*d2 + 3*d1"
  std::string to_string(const std::vector<std::string>& var_names) const;

private:
  std::vector<Term> terms_;
};

// d^theta * g, built by repeated use of d_i (b d^alpha) = b d^(alpha+e_i) + d_i(b) d^alpha
// with intermediate shifts memoized.
DiffOperator shift(const Exponent& theta, const DiffOperator& g);

// theta(a): iterated partial derivatives
RationalFunction apply_derivatives(const Exponent& theta, const RationalFunction& a);

// "d1^2*d2", empty string for theta = 0
std::string render_theta(const Exponent& theta);

} // namespace diffdim
