#pragma once

#include <stdexcept>
#include <string>

namespace erfpoly {

// Argument outside the region where a formula or function is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative solver did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested work exceeds a configured ceiling.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace erfpoly
