#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "diffdim/exponent.hpp"

namespace diffdim {

// Sparse multivariate polynomial over Q in x1..x8, terms kept in strictly
// decreasing graded reverse lexicographic order with nonzero coefficients.
class Poly {
public:
  struct Term {
    Exponent exp;
    mpq_class coeff;
  };

  Poly() = default;
  Poly(const mpq_class& c);
  Poly(long c) : Poly(mpq_class(c)) {}

  static Poly variable(std::size_t i);
  static Poly monomial(const Exponent& e, const mpq_class& c);
  // canonicalizes: sorts, merges equal exponents, drops zeros
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  // 0 for the zero polynomial
  mpq_class constant_value() const;

  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Exponent& leading_exp() const { return terms_.front().exp; }
  const mpq_class& leading_coeff() const { return terms_.front().coeff; }

  int total_degree() const;
  int degree_in(std::size_t var) const;
  // bit i set iff x_{i+1} occurs
  unsigned variables_mask() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const mpq_class& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
  Poly operator-() const;

  // this * coeff * x^shift
  Poly mul_term(const Exponent& shift, const mpq_class& coeff) const;

  Poly derivative(std::size_t var) const;

  // gcd of numerators over lcm of denominators, sign of the leading coefficient
  mpq_class content() const;
  // lcm of the coefficient denominators
  mpz_class denominator_lcm() const;
  Poly primitive_part() const;
  // leading coefficient 1
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

  std::string to_string(const std::vector<std::string>& names) const;
  std::size_t hash() const;

  // Value at `point` (one residue per variable) modulo the prime p.
  // Returns nullopt when a coefficient denominator vanishes mod p.
  std::optional<std::uint64_t> eval_mod(const std::vector<std::uint64_t>& point,
                                        std::uint64_t p) const;

private:
  std::vector<Term> terms_;
};

// Quotient a / b when b divides a exactly, nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Monic greatest common divisor over Q (0 only when both inputs are 0).
Poly gcd(const Poly& a, const Poly& b);

std::string to_string(const mpq_class& q);

} // namespace diffdim
