#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sproots {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different fields.
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands belong to different fields") {}
};

/// A precondition on a value was violated (index out of range, zero inverse, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration was refused because its size exceeds a hard limit.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, unsigned requested, unsigned limit)
      : Error(what + ": " + std::to_string(requested) + " exceeds enumeration limit " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  unsigned requested() const { return requested_; }
  unsigned limit() const { return limit_; }

 private:
  unsigned requested_;
  unsigned limit_;
};

/// Malformed serialized input (JSON documents).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace sproots
