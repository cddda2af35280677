#pragma once

#include <stdexcept>
#include <string>

namespace diffdim {

// Base for every error the library reports. `kind()` is the stable name used
// in machine-readable CLI output.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

struct NotIntegerValued : Error {
  explicit NotIntegerValued(const std::string& what) : Error("NotIntegerValued", what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("DivisionByZero", "division by zero") {}
};

struct NotZeroRank : Error {
  explicit NotZeroRank(const std::string& what) : Error("NotZeroRank", what) {}
};

struct RetriesExhausted : Error {
  explicit RetriesExhausted(const std::string& what) : Error("RetriesExhausted", what) {}
};

struct OrderProfileTooSmall : Error {
  explicit OrderProfileTooSmall(const std::string& what) : Error("OrderProfileTooSmall", what) {}
};

struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& what) : Error("UnknownSymbol", what) {}
};

struct NonlinearTerm : Error {
  explicit NonlinearTerm(const std::string& what) : Error("NonlinearTerm", what) {}
};

struct SyntaxError : Error {
  SyntaxError(int line, int column, const std::string& what)
      : Error("SyntaxError", std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line), column(column) {}

  int line;
  int column;
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error("BudgetExceeded", what) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

} // namespace diffdim
