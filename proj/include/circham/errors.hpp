#pragma once

#include <stdexcept>
#include <string>

namespace circham {

/// Rejected user input: malformed specs, certificates or flags.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal contract failed (a construction schedule broke, a criterion
/// disagreed with the exhaustive search, ...). Always a bug, never data.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The search node budget ran out before a verdict was reached.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace circham
