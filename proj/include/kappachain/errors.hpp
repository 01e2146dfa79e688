#pragma once

#include <stdexcept>
#include <string>

namespace kappachain {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a documented precondition or type invariant.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A chain or triangle cannot be realized on the requested surface.
class EmbeddabilityError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent use of the API, e.g. mixing points from different surfaces.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling ran out of attempts.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

}  // namespace kappachain
