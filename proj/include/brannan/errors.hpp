#pragma once

#include <stdexcept>
#include <string>

namespace brannan {

// Input outside the documented domain of an operation.
using domain_error = std::domain_error;

// A quadrature or scan failed to converge, or produced a non-finite value.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// A certification-level assertion failed (e.g. the tail audit), hard stop.
class certification_error : public std::runtime_error {
 public:
  explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace brannan
