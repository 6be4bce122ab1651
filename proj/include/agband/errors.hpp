#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agband {

// Index outside [0, order).
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed or inconsistent caller input (wrong orders, empty seeds, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition on the input structure does not hold,
// e.g. a groupoid that was required to be an ARAGB fails one of the laws.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematically guaranteed outcome failed to occur. Never swallowed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Request is outside the supported computational envelope.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace agband
