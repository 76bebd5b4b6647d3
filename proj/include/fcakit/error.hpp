#pragma once

#include <stdexcept>
#include <string>

namespace fca {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// API misuse: foreign sets, out-of-range indices, invalid construction.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Operation undefined for the given input (e.g. the row/column fill edit on
// an incident pair, or selecting an object for a full column).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a hard feasibility guard of an exhaustive routine.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Malformed context file.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace fca
