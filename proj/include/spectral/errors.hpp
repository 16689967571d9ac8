#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

/// A precondition of a library operation was violated by otherwise well-formed input.
/// `kind()` is a short machine-readable tag (e.g. "not_a_member", "shape_mismatch").
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Input text could not be parsed into a value of the requested type.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spectral
