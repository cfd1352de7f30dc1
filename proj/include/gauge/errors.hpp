#pragma once

#include <stdexcept>
#include <string>

namespace gauge {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside a supported range (e.g. n > 16).
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Text input (signature, label, descriptor) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates a structural invariant or compatibility condition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain (precondition violated).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gauge
