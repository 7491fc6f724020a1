#pragma once

#include <stdexcept>
#include <string>

namespace rhv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input (diagram specs, CLI arguments).
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t position = 0)
      : Error(msg), pos(position) {}
};

// A configurable size limit was hit before the computation finished.
struct GuardExceeded : Error {
  long long partial;
  GuardExceeded(const std::string& msg, long long partial_count = -1)
      : Error(msg), partial(partial_count) {}
};

// Request outside the families a closed-form table or catalog covers.
struct UncoveredCase : Error {
  using Error::Error;
};

// Two supposedly equivalent criteria disagreed; signals a bug, not bad input.
struct Inconsistency : Error {
  using Error::Error;
};

// Operation precondition violated (wrong node set, non-dominant weight, ...).
struct Precondition : Error {
  using Error::Error;
};

}  // namespace rhv
