#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zerolen {

/// A precondition of an operation was violated (bad group, non-zero-sum input, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured effort cap (sequence length, memo nodes, length capacity) was hit.
/// Never thrown for silent truncation: callers always see it.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a byte offset into the parsed string.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace zerolen
