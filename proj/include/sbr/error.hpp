#pragma once

#include <stdexcept>
#include <string>

namespace sbr {

// Thrown when an input violates a documented contract: an invalid
// convergence witness, a malformed truncation, a precision precondition.
// The CLI maps this to exit code 2.
class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sbr
