#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigverify {

// Base for every failure the library reports. Claim failures are never
// thrown; they are reported through the various *Report types.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact quantity expected to be an integer reduced to a fraction.
class NonInteger : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class InvalidPrime : public Error {
 public:
  using Error::Error;
};

class DivisibilityFailure : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularParameter : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NonMonotonic : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace trigverify
