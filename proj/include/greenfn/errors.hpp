#pragma once

#include <stdexcept>
#include <string>

namespace greenfn {

/// Raised when caller-supplied input violates a documented precondition.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal identity that must hold does not.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace greenfn
