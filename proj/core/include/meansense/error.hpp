#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace meansense {

/// Base of every error raised by the library. `exit_code()` follows the CLI
/// contract: 2 for usage/config problems, 3 for resource limits.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 2; }
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class WitnessUnavailable : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

// 64-bit length arithmetic overflowed while filling a schedule.
class OverflowError : public ResourceError {
 public:
  OverflowError(const std::string& what, unsigned level)
      : ResourceError(what), level_(level) {}
  unsigned level() const noexcept { return level_; }

 private:
  unsigned level_;
};

// A requested horizon needs more levels than the schedule has.
class DepthError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class HorizonExhausted : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class CapExceeded : public ResourceError {
 public:
  CapExceeded(const std::string& what, std::uint64_t required)
      : ResourceError(what), required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace meansense
