#ifndef COXBRAID_ERRORS_HPP
#define COXBRAID_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxbraid {

// Malformed input or a violated operation precondition. User error, exit 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closure or sweep exceeded its node budget. Never silent truncation.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::size_t budget)
      : std::runtime_error(what + " (budget " + std::to_string(budget) + ")"),
        budget_(budget) {}

  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

// A theorem-backed property failed. Implementation bug, never user error.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coxbraid

#endif  // COXBRAID_ERRORS_HPP
