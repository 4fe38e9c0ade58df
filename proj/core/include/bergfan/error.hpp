#pragma once

#include <stdexcept>
#include <string>

namespace bergfan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (edge lists, named graphs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration was asked to run beyond its supported size.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace bergfan
