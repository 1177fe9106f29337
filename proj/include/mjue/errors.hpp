#pragma once

#include <stdexcept>
#include <string>

namespace mjue {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (pole, cut, interval).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative or discretized computation failed to converge or lost stability.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration or command line.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mjue
