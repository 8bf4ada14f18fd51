#pragma once

#include <stdexcept>
#include <string>

namespace schroeder {

/// Malformed arguments: duplicate entries, empty operands, bad text.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Schröder path string that leaves the region or does not close.
class MalformedPath : public InvalidInput {
 public:
  MalformedPath(const std::string& what, std::size_t index)
      : InvalidInput(what + " at index " + std::to_string(index)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Input lies outside S(1243, 2143) where a class-only map was requested.
class NotInClass : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Requested enumeration exceeds the configured size limit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Algebraic failure: division by zero series, pole at the origin, collapsed CF.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace schroeder
