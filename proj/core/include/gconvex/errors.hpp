#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gconvex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: out-of-range vertex, self-loop, malformed argument.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An exponential operation was asked to run above its size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// interval() on a closure-rule convexity (F-free, P4+).
class UnsupportedOracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace gconvex
