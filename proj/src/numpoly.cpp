#include "diffdim/numpoly.hpp"

#include <algorithm>
#include <sstream>

#include "diffdim/errors.hpp"

namespace diffdim {

namespace {

// dense coefficients of C(s+i, i) = (s+1)(s+2)...(s+i)/i!
std::vector<mpq_class> dense_binomial(int i) {
  std::vector<mpq_class> p{1};
  for (int k = 1; k <= i; ++k) {
    std::vector<mpq_class> q(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j] += p[j] * k;
      q[j + 1] += p[j];
    }
    p = std::move(q);
  }
  mpz_class fact = 1;
  for (int k = 2; k <= i; ++k)
    fact *= k;
  for (auto& c : p)
    c /= fact;
  return p;
}

} // namespace

mpz_class binomial_poly_value(const mpz_class& n, int k) {
  mpz_class r = 1;
  for (int j = 0; j < k; ++j) {
    r *= n - j;
    r /= j + 1; // exact: product of j+1 consecutive integers
  }
  return r;
}

mpz_class choose(long n, long k) {
  if (k < 0 || n < k)
    return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void NumericalPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

NumericalPolynomial NumericalPolynomial::from_standard(std::vector<mpz_class> descending, int m_cap) {
  NumericalPolynomial p;
  p.coeffs_.assign(descending.rbegin(), descending.rend());
  p.m_cap_ = m_cap;
  p.strip();
  return p;
}

NumericalPolynomial NumericalPolynomial::from_dense(const std::vector<mpq_class>& ascending, int m_cap) {
  std::vector<mpq_class> rest = ascending;
  while (!rest.empty() && rest.back() == 0)
    rest.pop_back();
  NumericalPolynomial p;
  p.m_cap_ = m_cap;
  if (rest.empty())
    return p;
  p.coeffs_.assign(rest.size(), 0);
  mpz_class fact = 1;
  for (std::size_t k = 2; k < rest.size(); ++k)
    fact *= static_cast<unsigned long>(k);
  for (int d = static_cast<int>(rest.size()) - 1; d >= 0; --d) {
    // leading coefficient of C(s+d, d) is 1/d!
    mpq_class a = rest[static_cast<std::size_t>(d)] * fact;
    a.canonicalize();
    if (a.get_den() != 1)
      throw NotIntegerValued("standard coefficient a_" + std::to_string(d) + " = " + a.get_str() +
                             " is not an integer");
    p.coeffs_[static_cast<std::size_t>(d)] = a.get_num();
    if (a != 0) {
      const auto b = dense_binomial(d);
      for (std::size_t j = 0; j < b.size(); ++j)
        rest[j] -= a * b[j];
    }
    if (d > 1)
      fact /= d;
  }
  p.strip();
  return p;
}

NumericalPolynomial NumericalPolynomial::binomial(int i) {
  NumericalPolynomial p;
  p.coeffs_.assign(static_cast<std::size_t>(i) + 1, 0);
  p.coeffs_.back() = 1;
  return p;
}

NumericalPolynomial NumericalPolynomial::shifted_binomial(int m, int k) {
  // sum_t C(s+m-k, m) t^s = t^k / (1-t)^{m+1}; expanding t^k = (1-(1-t))^k
  // gives a_i = (-1)^{m-i} C(k, m-i) modulo terms that vanish for large s
  NumericalPolynomial p;
  p.coeffs_.assign(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i <= m; ++i) {
    mpz_class c = choose(k, m - i);
    p.coeffs_[static_cast<std::size_t>(i)] = ((m - i) % 2 == 0) ? c : mpz_class(-c);
  }
  p.m_cap_ = m;
  p.strip();
  return p;
}

mpz_class NumericalPolynomial::coeff(int i) const {
  if (i < 0 || i > degree())
    return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<mpz_class> NumericalPolynomial::std_coeffs() const {
  return std::vector<mpz_class>(coeffs_.rbegin(), coeffs_.rend());
}

mpz_class NumericalPolynomial::evaluate(long s) const {
  mpz_class total = 0;
  mpz_class b = 1; // C(s+i, i), built incrementally
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) {
      b *= s + static_cast<long>(i);
      b /= static_cast<unsigned long>(i);
    }
    total += coeffs_[i] * b;
  }
  return total;
}

std::vector<mpq_class> NumericalPolynomial::to_dense() const {
  std::vector<mpq_class> out(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    const auto b = dense_binomial(static_cast<int>(i));
    for (std::size_t j = 0; j < b.size(); ++j)
      out[j] += mpq_class(coeffs_[i]) * b[j];
  }
  return out;
}

NumericalPolynomial& NumericalPolynomial::operator+=(const NumericalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  m_cap_ = std::max(m_cap_, o.m_cap_);
  strip();
  return *this;
}

NumericalPolynomial& NumericalPolynomial::operator-=(const NumericalPolynomial& o) {
  return *this += o.scale(-1);
}

NumericalPolynomial NumericalPolynomial::scale(const mpz_class& c) const {
  NumericalPolynomial p = *this;
  for (auto& a : p.coeffs_)
    a *= c;
  p.strip();
  return p;
}

std::string NumericalPolynomial::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    mpz_class a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0)
      continue;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      a = abs(a);
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1)
        os << a.get_str() << "*";
      os << "C(s+" << i << "," << i << ")";
    }
  }
  return os.str();
}

} // namespace diffdim
