#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forge {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands from incompatible rings (different variables, coefficients or order).
class RingMismatch : public Error {
public:
  using Error::Error;
};

// A precondition on the arguments does not hold.
class DomainError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace forge
