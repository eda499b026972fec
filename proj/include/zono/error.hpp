#pragma once

#include <stdexcept>
#include <string>

namespace zono {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: dimension mismatch, negative bounds, non-primitive vectors.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine was asked to evaluate at a pole or outside its range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The estimated memory footprint of an exact computation exceeds the budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle refused an instance that is too large for it.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed or unverifiable zeros file.
class ZerosFileError : public Error {
 public:
  using Error::Error;
};

}  // namespace zono
