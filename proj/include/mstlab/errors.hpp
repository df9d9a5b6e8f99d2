#pragma once

#include <stdexcept>
#include <string>

namespace mstlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a configured size or memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Working precision is insufficient for the requested result.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A truncated series cannot meet the requested tolerance.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double achieved_bound)
      : Error(what), achieved_bound_(achieved_bound) {}
  double achieved_bound() const noexcept { return achieved_bound_; }

 private:
  double achieved_bound_;
};

/// Adaptive quadrature did not reach its tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double best_value, double achieved_error)
      : Error(what), best_value_(best_value), achieved_error_(achieved_error) {}
  double best_value() const noexcept { return best_value_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double best_value_;
  double achieved_error_;
};

/// Two independent evaluations of the same quantity disagree.
class MethodDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace mstlab
