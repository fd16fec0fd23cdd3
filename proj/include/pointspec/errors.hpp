#pragma once

#include <stdexcept>
#include <string>

namespace pointspec {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on (or within tolerance of) a pole.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, long index) : Error(what), index_(index) {}
  /// Integer labelling the pole: n for Gamma(-n), or the level index of a background eigenvalue.
  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// Result would overflow the double range.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, double threshold) : Error(what), threshold_(threshold) {}
  double threshold() const noexcept { return threshold_; }

 private:
  double threshold_;
};

/// A reduced secular form was requested where it does not exist.
class InvalidFormError : public Error {
 public:
  using Error::Error;
};

/// Precondition of an operation violated (bad window, near-pole oracle energy, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unknown configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace pointspec
