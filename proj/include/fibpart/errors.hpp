#pragma once

#include <stdexcept>
#include <string>

namespace fibpart {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a map (rotate, cdf_bounds, ...).
class OutOfDomainError : public Error {
 public:
  using Error::Error;
};

/// h or k evaluated at a point where it is undefined (1/phi^3, 0, strip edges).
class BreakpointError : public Error {
 public:
  using Error::Error;
};

/// A recursion ran past its configured depth bound.
class DepthExceededError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle was asked for an n above its configured cap.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

/// Pair (x, y) that is not a lattice point of the orbit strip.
class InvalidPointError : public Error {
 public:
  using Error::Error;
};

class NonPositiveRatioError : public Error {
 public:
  using Error::Error;
};

}  // namespace fibpart
