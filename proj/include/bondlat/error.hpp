#pragma once

#include <stdexcept>
#include <string>

namespace bondlat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (unknown ids, violated type invariants).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A domain question has no solution (no bond, no flow, no orientation).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An exploration bound was hit before the object was fully generated.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_(partial) {}
  std::size_t partial_count() const { return partial_; }

 private:
  std::size_t partial_;
};

}  // namespace bondlat
