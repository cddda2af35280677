#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffdim/operator.hpp"

namespace diffdim {

// Orderly ranking on derivative terms theta*m_j. Terms of higher order always
// rank higher. Among terms of equal order, `degrevlex` compares the position
// first (m_1 > m_2 > ... > m_n) and then the reverse lexicographic order of
// theta; `degrevlex-top` compares theta first and the position last.
class Ranking {
public:
  enum class Kind { DegRevLex, DegRevLexTermFirst };

  Ranking() = default;
  explicit Ranking(Kind kind) : kind_(kind) {}

  // throws InvalidArgument on an unknown name
  static Ranking parse(const std::string& name);
  std::string name() const;
  Kind kind() const { return kind_; }

  // true when theta_a * m_{pos_a} ranks strictly above theta_b * m_{pos_b}
  bool greater(int pos_a, const Exponent& a, int pos_b, const Exponent& b) const {
    const int oa = a.order(), ob = b.order();
    if (oa != ob)
      return oa > ob;
    if (kind_ == Kind::DegRevLex) {
      if (pos_a != pos_b)
        return pos_a < pos_b;
      return grevlex_greater(a, b);
    }
    if (a != b)
      return grevlex_greater(a, b);
    return pos_a < pos_b;
  }

private:
  Kind kind_ = Kind::DegRevLex;
};

// sum_j sigma_j m_j in the free module D^n; positions are 0-based.
class ModuleElement {
public:
  ModuleElement() = default;
  explicit ModuleElement(std::size_t n) : comps_(n) {}
  explicit ModuleElement(std::vector<DiffOperator> comps) : comps_(std::move(comps)) {}

  // theta * m_j with coefficient a
  static ModuleElement term(std::size_t n, std::size_t j, const Exponent& theta, const RationalFunction& a = 1);

  std::size_t size() const { return comps_.size(); }
  const DiffOperator& operator[](std::size_t j) const { return comps_[j]; }
  DiffOperator& operator[](std::size_t j) { return comps_[j]; }
  const std::vector<DiffOperator>& components() const { return comps_; }

  bool is_zero() const;
  // max_j ord sigma_j, -1 for zero
  int order() const;
  // ord_{m_j}
  int order_in(std::size_t j) const { return comps_[j].order(); }

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

  // sigma * f = sum_j (sigma sigma_j) m_j
  friend ModuleElement operator*(const DiffOperator& sigma, const ModuleElement& f);

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.comps_ == b.comps_; }

  // leading (position, theta) under the ranking
  std::optional<std::pair<int, Exponent>> leading(const Ranking& ranking) const;

  // "(x1)*d1*y1 - d2*y2", "0" for zero
  std::string to_string(const std::vector<std::string>& var_names,
                        const std::vector<std::string>& unknown_names) const;

private:
  std::vector<DiffOperator> comps_;
};

} // namespace diffdim
