#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eraodds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation was asked for outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A year or index lies outside the span covered by the data.
class OutOfRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input data could not be accepted (bad file, bad record, bad configuration).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed delimited text. Carries the source name and 1-based line.
class ParseError : public InputError {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  [[nodiscard]] const std::string& source() const noexcept { return source_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Well-formed input that violates a data invariant.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Inputs that are individually valid but do not fit together.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace eraodds
