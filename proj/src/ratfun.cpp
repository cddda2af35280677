#include "diffdim/ratfun.hpp"

#include "diffdim/errors.hpp"

namespace diffdim {

namespace {

Poly exact(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q)
    throw std::logic_error("rational function: inexact division");
  return std::move(*q);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1)
      r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * a) % p);
    a = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * a) % p);
    e >>= 1;
  }
  return r;
}

} // namespace

RationalFunction::RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero())
    throw DivisionByZero();
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact(num_, g);
      den_ = exact(den_, g);
    }
  }
  const mpq_class lc = den_.leading_coeff();
  if (lc != 1) {
    num_ *= mpq_class(1 / lc);
    den_ *= mpq_class(1 / lc);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one())
      normalize();
    else if (num_.is_zero())
      den_ = Poly(1);
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): the only possible common factor of the
  // new numerator and denominator divides g
  const Poly g = gcd(den_, o.den_);
  const Poly b1 = exact(den_, g), d1 = exact(o.den_, g);
  Poly num = num_ * d1 + o.num_ * b1;
  Poly den = den_ * d1;
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return *this;
  }
  if (!g.is_one()) {
    const Poly h = gcd(num, g);
    if (!h.is_one()) {
      num = exact(num, h);
      den = exact(den, h);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
  const mpq_class lc = den_.leading_coeff();
  if (lc != 1) {
    num_ *= mpq_class(1 / lc);
    den_ *= mpq_class(1 / lc);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return *this;
  }
  if (o.is_constant()) {
    num_ *= o.num_.leading_coeff();
    return *this;
  }
  if (is_constant()) {
    const mpq_class c = num_.leading_coeff();
    *this = o;
    num_ *= c;
    return *this;
  }
  // (a/b)(c/d) = (a/g1)(c/g2) / ((b/g2)(d/g1))
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    const Poly g1 = gcd(a, d);
    if (!g1.is_one()) {
      a = exact(a, g1);
      d = exact(d, g1);
    }
  }
  if (!b.is_one()) {
    const Poly g2 = gcd(c, b);
    if (!g2.is_one()) {
      c = exact(c, g2);
      b = exact(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  const mpq_class lc = den_.leading_coeff();
  if (lc != 1) {
    num_ *= mpq_class(1 / lc);
    den_ *= mpq_class(1 / lc);
  }
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero())
    throw DivisionByZero();
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  const mpq_class lc = r.den_.leading_coeff();
  if (lc != 1) {
    r.num_ *= mpq_class(1 / lc);
    r.den_ *= mpq_class(1 / lc);
  }
  return r;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (is_polynomial())
    return RationalFunction(num_.derivative(var));
  const Poly db = den_.derivative(var);
  if (db.is_zero())
    return RationalFunction(num_.derivative(var), den_);
  // with g = gcd(b, b') and h = b/g, (a/b)' = (a'h - a b'/g)/(b h); a common
  // factor of that numerator and denominator can only divide g
  const Poly g = gcd(den_, db);
  const Poly h = exact(den_, g);
  Poly num = num_.derivative(var) * h - num_ * exact(db, g);
  if (num.is_zero())
    return RationalFunction();
  Poly den = den_ * h;
  if (!g.is_constant()) {
    const Poly r = gcd(num, g);
    if (!r.is_one()) {
      num = exact(num, r);
      den = exact(den, r);
    }
  }
  RationalFunction out;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  const mpq_class lc = out.den_.leading_coeff();
  if (lc != 1) {
    out.num_ *= mpq_class(1 / lc);
    out.den_ *= mpq_class(1 / lc);
  }
  return out;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  auto wrap = [&](const Poly& p) {
    const std::string s = p.to_string(names);
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  if (is_polynomial())
    return num_.to_string(names);
  if (den_.is_constant())
    return wrap(num_) + "/" + den_.leading_coeff().get_str();
  return wrap(num_) + "/" + wrap(den_);
}

std::optional<std::uint64_t> RationalFunction::eval_mod(const std::vector<std::uint64_t>& point,
                                                        std::uint64_t p) const {
  auto n = num_.eval_mod(point, p);
  auto d = den_.eval_mod(point, p);
  if (!n || !d || *d == 0)
    return std::nullopt;
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(*n) * inverse_mod(*d, p)) % p);
}

} // namespace diffdim
