#pragma once

#include <stdexcept>
#include <string>

namespace ppfast {

// Malformed textual input (JSON, rationals, words).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on input violating its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ppfast
