#include "diffdim/module.hpp"

#include <sstream>

#include "diffdim/errors.hpp"

namespace diffdim {

Ranking Ranking::parse(const std::string& name) {
  if (name == "degrevlex")
    return Ranking(Kind::DegRevLex);
  if (name == "degrevlex-top")
    return Ranking(Kind::DegRevLexTermFirst);
  throw InvalidArgument("unknown ranking '" + name + "' (expected degrevlex or degrevlex-top)");
}

std::string Ranking::name() const { return kind_ == Kind::DegRevLex ? "degrevlex" : "degrevlex-top"; }

ModuleElement ModuleElement::term(std::size_t n, std::size_t j, const Exponent& theta, const RationalFunction& a) {
  ModuleElement f(n);
  f.comps_[j] = DiffOperator::monomial(theta, a);
  return f;
}

bool ModuleElement::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero())
      return false;
  return true;
}

int ModuleElement::order() const {
  int o = -1;
  for (const auto& c : comps_)
    o = std::max(o, c.order());
  return o;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (comps_.size() < o.comps_.size())
    comps_.resize(o.comps_.size());
  for (std::size_t j = 0; j < o.comps_.size(); ++j)
    comps_[j] += o.comps_[j];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (comps_.size() < o.comps_.size())
    comps_.resize(o.comps_.size());
  for (std::size_t j = 0; j < o.comps_.size(); ++j)
    comps_[j] -= o.comps_[j];
  return *this;
}

ModuleElement operator*(const DiffOperator& sigma, const ModuleElement& f) {
  ModuleElement r(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    r.comps_[j] = sigma * f.comps_[j];
  return r;
}

std::optional<std::pair<int, Exponent>> ModuleElement::leading(const Ranking& ranking) const {
  std::optional<std::pair<int, Exponent>> best;
  for (std::size_t j = 0; j < comps_.size(); ++j)
    for (const auto& t : comps_[j].terms())
      if (!best || ranking.greater(static_cast<int>(j), t.theta, best->first, best->second))
        best = std::make_pair(static_cast<int>(j), t.theta);
  return best;
}

std::string ModuleElement::to_string(const std::vector<std::string>& var_names,
                                     const std::vector<std::string>& unknown_names) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    const std::string name = j < unknown_names.size() ? unknown_names[j] : "y" + std::to_string(j + 1);
    for (const auto& t : comps_[j].terms()) {
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
      if (!c.is_one()) {
        if (c.is_constant() && c.constant_value().get_den() == 1)
          os << c.constant_value().get_str() << "*";
        else
          os << "(" << c.to_string(var_names) << ")*";
      }
      const std::string th = render_theta(t.theta);
      if (!th.empty())
        os << th << "*";
      os << name;
    }
  }
  return first ? "0" : os.str();
}

} // namespace diffdim
