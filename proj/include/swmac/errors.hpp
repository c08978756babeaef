#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace swmac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain value violated its type invariant at construction.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// One of the closed-form outage denominators is (numerically) zero.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature could not meet the requested tolerance.
class QuadratureNonConvergence : public Error {
 public:
  QuadratureNonConvergence(const std::string& what, double error_estimate)
      : Error(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

/// The rate region is empty at the requested common-message rate.
class EmptyRegion : public Error {
 public:
  using Error::Error;
};

/// Structured-text configuration could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : Error("line " + std::to_string(line) + (field.empty() ? "" : " (" + field + ")") +
              ": " + message),
        line_(line),
        field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// A parsed configuration violates an invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace swmac
