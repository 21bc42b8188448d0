#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad k, mismatched sizes...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Training or estimation produced non-finite values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  MalformedHeader,
  UnsupportedFormat,
  NonNumericToken,
  ColumnCount,
  CountMismatch,
  ZeroPoints,
  InvalidValue,
};

const char* to_string(ParseErrorKind kind);

/// Point-cloud file parse failure. `line()` is 1-based; 0 means end of file.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

}  // namespace cfps
