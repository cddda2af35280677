#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace diffdim {

// Integer-valued polynomial in s stored in the binomial basis
//   v(s) = sum_i a_i * C(s+i, i).
// The a_i are the standard coefficients; the zero polynomial has degree -1.
class NumericalPolynomial {
public:
  NumericalPolynomial() = default;

  // a_d..a_0, leading zeros are stripped
  static NumericalPolynomial from_standard(std::vector<mpz_class> descending, int m_cap = -1);
  // c_0 + c_1 s + ... + c_k s^k; throws NotIntegerValued
  static NumericalPolynomial from_dense(const std::vector<mpq_class>& ascending, int m_cap = -1);
  // C(s+i, i)
  static NumericalPolynomial binomial(int i);
  // C(s+m-k, m) as a polynomial in s
  static NumericalPolynomial shifted_binomial(int m, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  int m_cap() const { return m_cap_; }
  void set_m_cap(int m) { m_cap_ = m; }

  // a_i; zero outside 0..degree
  mpz_class coeff(int i) const;
  mpz_class leading() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }
  // (a_d, ..., a_0)
  std::vector<mpz_class> std_coeffs() const;

  mpz_class evaluate(long s) const;
  // monomial-basis coefficients, ascending powers of s
  std::vector<mpq_class> to_dense() const;

  NumericalPolynomial& operator+=(const NumericalPolynomial& o);
  friend NumericalPolynomial operator+(NumericalPolynomial a, const NumericalPolynomial& b) { return a += b; }
  NumericalPolynomial& operator-=(const NumericalPolynomial& o);
  friend NumericalPolynomial operator-(NumericalPolynomial a, const NumericalPolynomial& b) { return a -= b; }
  NumericalPolynomial scale(const mpz_class& c) const;

  friend bool operator==(const NumericalPolynomial& a, const NumericalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // "3*C(s+2,2) - C(s+1,1) + 4"
  std::string to_string() const;

private:
  void strip();

  std::vector<mpz_class> coeffs_; // ascending: coeffs_[i] = a_i
  int m_cap_ = -1;
};

// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0,
// i.e. the value of the polynomial n(n-1)...(n-k+1)/k!.
mpz_class binomial_poly_value(const mpz_class& n, int k);

// C(n, k) with the counting convention: 0 when k < 0 or n < k.
mpz_class choose(long n, long k);

} // namespace diffdim
