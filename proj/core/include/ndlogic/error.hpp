#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ndlogic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (signatures, JSON, names).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public InputError {
 public:
  using InputError::InputError;
};

/// Raised by semantic operations on algebras with an empty interpretation cell.
class NonTotalAlgebraError : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatchError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class UnknownRuleError : public Error {
 public:
  using Error::Error;
};

}  // namespace ndlogic
