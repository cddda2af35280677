#include "diffdim/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "diffdim/errors.hpp"

namespace diffdim {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t t = 0; t < k; ++t, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n')
        advance(1);
      continue;
    }
    const int l = line, c = column;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), l, c});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({Tok::Number, text.substr(i, j - i), l, c});
      advance(j - i);
    } else if (std::string("+-*/^()=;").find(ch) != std::string::npos) {
      out.push_back({Tok::Symbol, std::string(1, ch), l, c});
      advance(1);
    } else {
      throw SyntaxError(l, c, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

const std::set<std::string> kKeywords{"vars", "unknowns", "orders", "eq"};

// index of d<i>, x<i> or y<i> style names; 0 when the name has another shape
int indexed(const std::string& name, char prefix) {
  static const std::regex pattern("^[a-z]([1-9][0-9]*)$");
  std::smatch match;
  if (name.empty() || name[0] != prefix || !std::regex_match(name, match, pattern))
    return 0;
  if (match[1].str().size() > 3)
    return 0;
  return std::stoi(match[1].str());
}

// unknown-linear part plus an inhomogeneous part
struct Affine {
  ModuleElement linear;
  RationalFunction constant;

  bool is_constant() const { return linear.is_zero(); }
};

// one factor of a product before evaluation
struct Factor {
  enum Kind { Value, Derivation } kind = Value;
  Affine value;
  Exponent theta;
  bool divide = false;
  Token at;
};

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  SystemSource run() {
    SystemSource src;
    bool have_vars = false, have_unknowns = false;
    while (peek().kind == Tok::Ident && (peek().text == "vars" || peek().text == "unknowns" || peek().text == "orders")) {
      const Token kw = next();
      if (kw.text == "orders") {
        if (src.declared_orders)
          throw SyntaxError(kw.line, kw.column, "orders declared twice");
        std::vector<int> e;
        while (peek().kind == Tok::Number) {
          const Token t = next();
          if (t.text.size() > 4)
            throw SyntaxError(t.line, t.column, "order too large");
          e.push_back(std::stoi(t.text));
        }
        if (e.empty())
          throw SyntaxError(peek().line, peek().column, "expected at least one order");
        expect(";");
        src.declared_orders = std::move(e);
        continue;
      }
      auto& names = kw.text == "vars" ? src.vars : src.unknowns;
      bool& have = kw.text == "vars" ? have_vars : have_unknowns;
      if (have)
        throw SyntaxError(kw.line, kw.column, kw.text + " declared twice");
      have = true;
      while (peek().kind == Tok::Ident) {
        const Token t = next();
        if (kKeywords.count(t.text) || indexed(t.text, 'd'))
          throw SyntaxError(t.line, t.column, "'" + t.text + "' cannot be declared");
        if (std::find(src.vars.begin(), src.vars.end(), t.text) != src.vars.end() ||
            std::find(src.unknowns.begin(), src.unknowns.end(), t.text) != src.unknowns.end())
          throw SyntaxError(t.line, t.column, "'" + t.text + "' declared twice");
        names.push_back(t.text);
      }
      if (names.empty())
        throw SyntaxError(peek().line, peek().column, "expected at least one name");
      expect(";");
    }
    if (src.vars.size() > kMaxVars)
      throw SyntaxError(1, 1, "at most " + std::to_string(kMaxVars) + " variables are supported");
    infer(src, have_vars, have_unknowns);

    for (std::size_t k = 0; k < src.vars.size(); ++k)
      symbols_[src.vars[k]] = {false, k};
    for (std::size_t k = 0; k < src.unknowns.size(); ++k)
      symbols_[src.unknowns[k]] = {true, k};
    n_ = src.unknowns.size();
    m_ = src.vars.size();

    while (peek().kind != Tok::End) {
      const Token kw = next();
      if (kw.kind != Tok::Ident || kw.text != "eq")
        throw SyntaxError(kw.line, kw.column, "expected 'eq', found '" + kw.text + "'");
      Affine lhs = expr();
      expect("=");
      Affine rhs = expr();
      expect(";");
      src.equations.push_back({lhs.linear - rhs.linear, rhs.constant - lhs.constant});
    }
    if (src.equations.empty())
      throw SyntaxError(peek().line, peek().column, "expected at least one equation");
    if (src.declared_orders && src.declared_orders->size() != src.unknowns.size())
      throw SyntaxError(1, 1, "orders lists " + std::to_string(src.declared_orders->size()) + " values for " +
                                  std::to_string(src.unknowns.size()) + " unknowns");
    return src;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  bool at_symbol(const char* s) const { return peek().kind == Tok::Symbol && peek().text == s; }

  void expect(const char* s) {
    if (!at_symbol(s))
      throw SyntaxError(peek().line, peek().column,
                        std::string("expected '") + s + "', found " + (peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'"));
    ++pos_;
  }

  // without declarations, x<i>/d<i> fix m and y<j> fixes n
  void infer(SystemSource& src, bool have_vars, bool have_unknowns) const {
    int m = 0, n = 0;
    for (std::size_t k = pos_; k < toks_.size(); ++k) {
      if (toks_[k].kind != Tok::Ident)
        continue;
      m = std::max({m, indexed(toks_[k].text, 'x'), indexed(toks_[k].text, 'd')});
      n = std::max(n, indexed(toks_[k].text, 'y'));
    }
    if (!have_vars) {
      if (m > static_cast<int>(kMaxVars))
        throw SyntaxError(1, 1, "at most " + std::to_string(kMaxVars) + " variables are supported");
      for (int i = 1; i <= std::max(m, 1); ++i)
        src.vars.push_back("x" + std::to_string(i));
    }
    if (!have_unknowns)
      for (int j = 1; j <= n; ++j)
        src.unknowns.push_back("y" + std::to_string(j));
    if (src.unknowns.empty())
      throw SyntaxError(1, 1, "no unknowns declared or used");
  }

  Affine zero() const { return {ModuleElement(n_), RationalFunction()}; }

  Affine expr() {
    Affine acc = zero();
    bool first = true;
    for (;;) {
      bool negate = false;
      if (at_symbol("+") || at_symbol("-")) {
        negate = next().text == "-";
      } else if (!first) {
        return acc;
      }
      first = false;
      Affine t = product();
      if (negate) {
        acc.linear -= t.linear;
        acc.constant -= t.constant;
      } else {
        acc.linear += t.linear;
        acc.constant += t.constant;
      }
    }
  }

  bool starts_factor() const {
    return peek().kind == Tok::Ident || peek().kind == Tok::Number || at_symbol("(");
  }

  Affine product() {
    std::vector<Factor> factors;
    factors.push_back(factor(false));
    for (;;) {
      if (at_symbol("*")) {
        ++pos_;
        factors.push_back(factor(false));
      } else if (at_symbol("/")) {
        ++pos_;
        factors.push_back(factor(true));
      } else if (starts_factor()) {
        factors.push_back(factor(false));
      } else {
        break;
      }
    }
    // right to left, so a derivation sees the product to its right
    std::optional<Affine> acc;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (it->kind == Factor::Derivation) {
        if (!acc)
          throw SyntaxError(it->at.line, it->at.column, "derivation '" + it->at.text + "' has no operand");
        acc = differentiate(*acc, it->theta);
        continue;
      }
      Affine v = it->value;
      if (it->divide)
        v = reciprocal(v, it->at);
      acc = acc ? multiply(v, *acc, it->at) : v;
    }
    return *acc;
  }

  Factor factor(bool divide) {
    const Token start = peek();
    Factor f;
    f.divide = divide;
    f.at = start;
    if (start.kind == Tok::Number) {
      ++pos_;
      f.value = zero();
      f.value.constant = RationalFunction(mpq_class(mpz_class(start.text)));
    } else if (start.kind == Tok::Ident) {
      ++pos_;
      if (const int i = indexed(start.text, 'd'); i && !symbols_.count(start.text)) {
        if (i > static_cast<int>(m_))
          throw UnknownSymbol(where(start) + "derivation '" + start.text + "' exceeds the " + std::to_string(m_) +
                              " declared variables");
        if (divide)
          throw SyntaxError(start.line, start.column, "cannot divide by a derivation");
        f.kind = Factor::Derivation;
        f.theta = Exponent::unit(static_cast<std::size_t>(i - 1));
        if (at_symbol("^")) {
          ++pos_;
          const int k = natural();
          f.theta = Exponent();
          f.theta[static_cast<std::size_t>(i - 1)] = static_cast<Exponent::value_type>(k);
        }
        return f;
      }
      const auto sym = symbols_.find(start.text);
      if (sym == symbols_.end())
        throw UnknownSymbol(where(start) + "unknown symbol '" + start.text + "'");
      f.value = zero();
      if (sym->second.first)
        f.value.linear = ModuleElement::term(n_, sym->second.second, Exponent{});
      else
        f.value.constant = RationalFunction::variable(sym->second.second);
    } else if (at_symbol("(")) {
      ++pos_;
      f.value = expr();
      expect(")");
    } else {
      throw SyntaxError(start.line, start.column,
                        start.kind == Tok::End ? "unexpected end of input" : "unexpected '" + start.text + "'");
    }
    if (at_symbol("^")) {
      const Token caret = next();
      const int k = natural();
      f.value = power(f.value, k, caret);
    }
    return f;
  }

  int natural() {
    const Token t = peek();
    if (t.kind != Tok::Number)
      throw SyntaxError(t.line, t.column, "expected a non-negative integer exponent");
    ++pos_;
    if (t.text.size() > 4)
      throw SyntaxError(t.line, t.column, "exponent too large");
    return std::stoi(t.text);
  }

  static std::string where(const Token& t) { return std::to_string(t.line) + ":" + std::to_string(t.column) + ": "; }

  Affine multiply(const Affine& a, const Affine& b, const Token& at) const {
    if (!a.is_constant() && !b.is_constant())
      throw NonlinearTerm(where(at) + "product of two terms in the unknowns");
    Affine r = zero();
    r.constant = a.constant * b.constant;
    if (!a.is_constant())
      r.linear = DiffOperator(b.constant) * a.linear;
    else if (!b.is_constant())
      r.linear = DiffOperator(a.constant) * b.linear;
    return r;
  }

  Affine reciprocal(const Affine& a, const Token& at) const {
    if (!a.is_constant())
      throw NonlinearTerm(where(at) + "division by a term in the unknowns");
    if (a.constant.is_zero())
      throw SyntaxError(at.line, at.column, "division by zero");
    Affine r = zero();
    r.constant = a.constant.inverse();
    return r;
  }

  Affine power(const Affine& a, int k, const Token& at) const {
    if (!a.is_constant()) {
      if (k == 1)
        return a;
      throw NonlinearTerm(where(at) + "power of a term in the unknowns");
    }
    Affine r = zero();
    r.constant = RationalFunction(1);
    for (int t = 0; t < k; ++t)
      r.constant *= a.constant;
    return r;
  }

  Affine differentiate(const Affine& a, const Exponent& theta) const {
    Affine r = zero();
    r.linear = DiffOperator::monomial(theta, RationalFunction(1)) * a.linear;
    r.constant = a.constant;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      for (int t = 0; t < theta[i]; ++t)
        r.constant = r.constant.derivative(i);
    return r;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::pair<bool, std::size_t>> symbols_; // name -> (is unknown, index)
  std::size_t n_ = 0;
  std::size_t m_ = 0;
};

} // namespace

std::vector<ModuleElement> SystemSource::generators() const {
  std::vector<ModuleElement> out;
  out.reserve(equations.size());
  for (const auto& eq : equations)
    out.push_back(eq.lhs);
  return out;
}

std::vector<int> SystemSource::orders() const {
  if (declared_orders)
    return *declared_orders;
  std::vector<int> e(unknowns.size(), 0);
  for (const auto& eq : equations)
    for (std::size_t j = 0; j < eq.lhs.size() && j < e.size(); ++j)
      e[j] = std::max(e[j], eq.lhs.order_in(j));
  return e;
}

SystemSource parse_system(const std::string& text) { return Parser(text).run(); }

std::string render_system(const SystemSource& source) {
  std::ostringstream os;
  os << "vars";
  for (const auto& v : source.vars)
    os << " " << v;
  os << ";\nunknowns";
  for (const auto& u : source.unknowns)
    os << " " << u;
  os << ";\n";
  if (source.declared_orders) {
    os << "orders";
    for (int e : *source.declared_orders)
      os << " " << e;
    os << ";\n";
  }
  for (const auto& eq : source.equations)
    os << "eq " << eq.lhs.to_string(source.vars, source.unknowns) << " = " << eq.rhs.to_string(source.vars) << ";\n";
  return os.str();
}

} // namespace diffdim
