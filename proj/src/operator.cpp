#include "diffdim/operator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace diffdim {

namespace {

bool theta_greater(const DiffOperator::Term& a, const DiffOperator::Term& b) {
  return grevlex_greater(a.theta, b.theta);
}

std::vector<DiffOperator::Term> merge(const std::vector<DiffOperator::Term>& a,
                                      const std::vector<DiffOperator::Term>& b, bool subtract) {
  std::vector<DiffOperator::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].theta == b[j].theta) {
      RationalFunction c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero())
        out.push_back({a[i].theta, std::move(c)});
      ++i;
      ++j;
    } else if (grevlex_greater(a[i].theta, b[j].theta)) {
      out.push_back(a[i++]);
    } else {
      out.push_back(subtract ? DiffOperator::Term{b[j].theta, -b[j].coeff} : b[j]);
      ++j;
    }
  }
  for (; i < a.size(); ++i)
    out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back(subtract ? DiffOperator::Term{b[j].theta, -b[j].coeff} : b[j]);
  return out;
}

// d_i * g
DiffOperator single_shift(std::size_t i, const DiffOperator& g) {
  std::vector<DiffOperator::Term> out;
  out.reserve(2 * g.terms().size());
  for (const auto& t : g.terms()) {
    out.push_back({t.theta + Exponent::unit(i), t.coeff});
    if (!t.coeff.is_constant()) {
      RationalFunction d = t.coeff.derivative(i);
      if (!d.is_zero())
        out.push_back({t.theta, std::move(d)});
    }
  }
  return DiffOperator::from_terms(std::move(out));
}

} // namespace

DiffOperator::DiffOperator(const RationalFunction& a) {
  if (!a.is_zero())
    terms_.push_back({Exponent{}, a});
}

DiffOperator DiffOperator::derivation(std::size_t i) { return monomial(Exponent::unit(i), 1); }

DiffOperator DiffOperator::monomial(const Exponent& theta, const RationalFunction& a) {
  DiffOperator d;
  if (!a.is_zero())
    d.terms_.push_back({theta, a});
  return d;
}

DiffOperator DiffOperator::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), theta_greater);
  DiffOperator d;
  d.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!d.terms_.empty() && d.terms_.back().theta == t.theta) {
      d.terms_.back().coeff += t.coeff;
    } else {
      if (!d.terms_.empty() && d.terms_.back().coeff.is_zero())
        d.terms_.pop_back();
      d.terms_.push_back(std::move(t));
    }
  }
  if (!d.terms_.empty() && d.terms_.back().coeff.is_zero())
    d.terms_.pop_back();
  return d;
}

int DiffOperator::order() const {
  // grevlex puts the highest order first
  return terms_.empty() ? -1 : terms_.front().theta.order();
}

bool DiffOperator::has_constant_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_constant(); });
}

RationalFunction DiffOperator::coeff(const Exponent& theta) const {
  for (const auto& t : terms_)
    if (t.theta == theta)
      return t.coeff;
  return RationalFunction();
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r = *this;
  for (auto& t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

DiffOperator DiffOperator::scaled(const RationalFunction& a) const {
  if (a.is_zero())
    return {};
  DiffOperator r = *this;
  for (auto& t : r.terms_)
    t.coeff = a * t.coeff;
  return r;
}

DiffOperator shift(const Exponent& theta, const DiffOperator& g) {
  if (theta.is_zero() || g.is_zero())
    return g;
  if (g.has_constant_coefficients()) {
    std::vector<DiffOperator::Term> out;
    out.reserve(g.terms().size());
    for (const auto& t : g.terms())
      out.push_back({t.theta + theta, t.coeff});
    return DiffOperator::from_terms(std::move(out));
  }
  // walk d1^k1, then d2^k2, ... applying one derivation at a time
  DiffOperator cur = g;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    for (int k = 0; k < theta[i]; ++k)
      cur = single_shift(i, cur);
  return cur;
}

DiffOperator operator*(const DiffOperator& f, const DiffOperator& g) {
  if (f.is_zero() || g.is_zero())
    return {};
  // memo of d^beta * g for every beta on the paths to the exponents of f
  std::map<Exponent, DiffOperator> memo;
  memo.emplace(Exponent{}, g);
  auto shifted = [&](const Exponent& theta) -> const DiffOperator& {
    auto it = memo.find(theta);
    if (it != memo.end())
      return it->second;
    // find a cached predecessor theta - e_i, recursing towards 0
    std::vector<std::size_t> path;
    Exponent cur = theta;
    while (memo.find(cur) == memo.end()) {
      std::size_t i = 0;
      while (cur[i] == 0)
        ++i;
      path.push_back(i);
      cur[i] = static_cast<Exponent::value_type>(cur[i] - 1);
    }
    for (auto p = path.rbegin(); p != path.rend(); ++p) {
      Exponent next = cur + Exponent::unit(*p);
      memo.emplace(next, single_shift(*p, memo.at(cur)));
      cur = next;
    }
    return memo.at(theta);
  };

  std::vector<DiffOperator::Term> out;
  for (const auto& t : f.terms()) {
    const DiffOperator& s = g.has_constant_coefficients() ? memo.emplace(t.theta, shift(t.theta, g)).first->second
                                                          : shifted(t.theta);
    for (const auto& u : s.terms())
      out.push_back({u.theta, t.coeff * u.coeff});
  }
  return DiffOperator::from_terms(std::move(out));
}

RationalFunction apply_derivatives(const Exponent& theta, const RationalFunction& a) {
  RationalFunction r = a;
  for (std::size_t i = 0; i < kMaxVars && !r.is_zero(); ++i)
    for (int k = 0; k < theta[i] && !r.is_zero(); ++k)
      r = r.derivative(i);
  return r;
}

RationalFunction DiffOperator::apply(const RationalFunction& a) const {
  RationalFunction r;
  for (const auto& t : terms_)
    r += t.coeff * apply_derivatives(t.theta, a);
  return r;
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
  if (a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].theta != b.terms_[i].theta || !(a.terms_[i].coeff == b.terms_[i].coeff))
      return false;
  return true;
}

std::string render_theta(const Exponent& theta) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!theta[i])
      continue;
    if (!first)
      os << "*";
    first = false;
    os << "d" << i + 1;
    if (theta[i] > 1)
      os << "^" << theta[i];
  }
  return os.str();
}

std::string DiffOperator::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    RationalFunction c = t.coeff;
    bool negative = false;
    if (c.is_constant() && c.constant_value() < 0) {
      negative = true;
      c = -c;
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const std::string th = render_theta(t.theta);
    std::string coeff;
    if (c.is_constant() && c.constant_value().get_den() == 1)
      coeff = c.constant_value().get_str();
    else
      coeff = "(" + c.to_string(var_names) + ")";
    if (th.empty())
      os << coeff;
    else if (c.is_one())
      os << th;
    else
      os << coeff << "*" << th;
  }
  return os.str();
}

} // namespace diffdim
