#pragma once

#include <stdexcept>
#include <string>

namespace metascale {

// Shape/dimension mismatch between tensors.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numeric-domain violation: log of a non-positive value, overflow to inf, ...
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Broken precondition or API contract.
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace metascale
