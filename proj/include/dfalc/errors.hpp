#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input files (ontology text, grounding JSON, reports).
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected,
              const std::string& detail = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class DegreeOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateDeclarationKind : public InputError {
 public:
  using InputError::InputError;
};

class InvalidGrounding : public InputError {
 public:
  using InputError::InputError;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedForm : public Error {
 public:
  using Error::Error;
};

class UndefinedFreshName : public Error {
 public:
  using Error::Error;
};

class EmptyTBox : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class UnsatisfiableSpec : public Error {
 public:
  using Error::Error;
};

/// Raised when the optimizer meets NaN/inf gradients or parameters.
class NumericError : public Error {
 public:
  using Error::Error;
};

class NonFiniteGradient : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace dfalc
