#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace f2 {

/// Malformed word text. `position()` is the 0-based index of the bad character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, char offending)
      : std::invalid_argument("invalid letter '" + std::string(1, offending) +
                              "' at position " + std::to_string(position) +
                              " (expected one of a, b, A, B)"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on an operation's input was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration or search hit a configured size ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace f2
