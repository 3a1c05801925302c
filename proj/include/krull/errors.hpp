#pragma once

#include <stdexcept>
#include <string>

namespace krull {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold. `clause()` names it.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string clause, const std::string& detail)
      : Error(clause + ": " + detail), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

// A bounded search ran out of room (factoring bound, lattice scan, ...).
class ExhaustedError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (JSON payloads, CLI arguments).
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace krull
