#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffdim/module.hpp"

namespace diffdim {

// One input equation, normalized to `lhs = rhs` with every unknown on the
// left and the inhomogeneous part on the right.
struct SourceEquation {
  ModuleElement lhs;
  RationalFunction rhs;

  friend bool operator==(const SourceEquation&, const SourceEquation&) = default;
};

struct SystemSource {
  std::vector<std::string> vars;     // x_i, also naming d_i = d/dx_i
  std::vector<std::string> unknowns; // m_j
  std::vector<SourceEquation> equations;
  std::optional<std::vector<int>> declared_orders;

  int m() const { return static_cast<int>(vars.size()); }
  int n() const { return static_cast<int>(unknowns.size()); }

  std::vector<ModuleElement> generators() const;
  // declared orders, or the maximal order of each unknown (0 when absent)
  std::vector<int> orders() const;

  friend bool operator==(const SystemSource&, const SystemSource&) = default;
};

// Grammar:
//   system := decl* eq+
//   decl   := "vars" ident+ ";" | "unknowns" ident+ ";" | "orders" nat+ ";"
//   eq     := "eq" expr "=" expr ";"
// Products may be written with "*" or by juxtaposition; a factor d<i>[^k]
// differentiates the product of the factors to its right. Without
// declarations, x<i> and y<j> name variables and unknowns. '#' starts a
// comment. Throws SyntaxError, UnknownSymbol or NonlinearTerm.
SystemSource parse_system(const std::string& text);

// Text that parses back to the same source.
std::string render_system(const SystemSource& source);

} // namespace diffdim
