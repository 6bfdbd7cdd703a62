#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqrank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A SimpleType with an out-of-range rank, or a non-simple request such as D2.
class InvalidType : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix sizes that do not match the algebra they are used with.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// e-basis coordinates requested for a block that is not of type A.
class UnsupportedBasis : public Error {
 public:
  using Error::Error;
};

/// Two characters (or a character and an embedding) over different algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// The character does not determine a positive-definite form.
class DegenerateForm : public Error {
 public:
  using Error::Error;
};

/// Operation needs a faithful character.
class NotFaithful : public Error {
 public:
  using Error::Error;
};

/// Highest weight that is not dominant, or not in the weight lattice.
class InvalidHighestWeight : public Error {
 public:
  using Error::Error;
};

/// Syntax error while reading an algebra expression.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace eqrank
