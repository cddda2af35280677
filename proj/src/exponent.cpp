#include "diffdim/exponent.hpp"

#include <stdexcept>

namespace diffdim {

Exponent::Exponent(std::initializer_list<int> coords) : Exponent(std::vector<int>(coords)) {}

Exponent::Exponent(const std::vector<int>& coords) {
  if (coords.size() > kMaxVars)
    throw std::invalid_argument("too many coordinates for an exponent");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] > 0xffff)
      throw std::invalid_argument("exponent coordinate out of range");
    c_[i] = static_cast<value_type>(coords[i]);
  }
}

std::string Exponent::to_string(std::size_t m) const {
  std::string out = "(";
  for (std::size_t i = 0; i < m; ++i) {
    if (i)
      out += ",";
    out += std::to_string(c_[i]);
  }
  return out + ")";
}

} // namespace diffdim
