#pragma once

#include <stdexcept>
#include <string>

namespace g2cert {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, non-invertible element, or an operation that has no
/// exact answer in the requested domain.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different fields or rings.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported range (degree caps, characteristic limits).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (variables, generators, pair budget) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal self-certification failed. Indicates a bug, never bad input.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (CLI flags, polynomial text, report JSON).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace g2cert
