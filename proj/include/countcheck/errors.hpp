#pragma once

#include <stdexcept>
#include <string>

namespace countcheck {

// Thrown when an intentionally superlinear computation (brute-force oracle,
// exhaustive scans) would exceed its configured work cap.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace countcheck
