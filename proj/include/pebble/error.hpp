#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pebble {

/// A parameter lies outside the range an operation accepts.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph spec or distribution text. `position` is the 0-based
/// character offset where parsing stopped.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A distribution or witness was combined with a graph it was not built for.
class GraphMismatch : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An illegal pebbling move (too few pebbles, or endpoints not adjacent).
class MoveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Pebble count arithmetic left the representable range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

}  // namespace pebble
