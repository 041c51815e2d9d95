#pragma once

#include <stdexcept>
#include <string>

namespace ctiq {

// Input violated a domain or type constraint. The CLI maps this to exit code 1.
class validation_error : public std::invalid_argument {
public:
  explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Computation failed at runtime: division by zero, non-convergence, overflow.
// The CLI maps this to exit code 2.
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ctiq
