#pragma once

#include <stdexcept>
#include <string>

namespace cnum {

// Base for all library failures. The CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad graph, bad sequence, bad family spec.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A request exceeds a configured size or state-count limit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace cnum
