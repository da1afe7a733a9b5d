#ifndef EXSUM_ERRORS_HPP
#define EXSUM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exsum {

// Precondition violated by the caller (bad sizes, negative values, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed rational text. line is 1-based, 0 when not from a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A Las Vegas loop exhausted its retry cap.
class RetryCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by WorkMeter when a computation runs past its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("work budget exceeded") {}
};

}  // namespace exsum

#endif  // EXSUM_ERRORS_HPP
