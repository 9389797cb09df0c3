#pragma once

#include <stdexcept>
#include <string>

namespace graphlie {

/// Bad user input: malformed graph text, out-of-range parameters, unmet
/// preconditions. The CLI maps it to exit status 1.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical invariant failed (oracle mismatch, cochain identity,
/// contradictory certificates). Always a bug; the CLI maps it to exit status 2.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace graphlie
