#pragma once

#include <stdexcept>
#include <string>

namespace rodbend {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature or series did not reach the requested tolerance.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  /// Error estimate reached before giving up.
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// Growing mode would overflow a double (exponent above the cap).
class SaturationError : public std::overflow_error {
 public:
  SaturationError(const std::string& what, double exponent)
      : std::overflow_error(what), exponent_(exponent) {}

  double exponent() const noexcept { return exponent_; }

 private:
  double exponent_;
};

/// Two independent evaluation routes disagreed.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, double discrepancy)
      : std::runtime_error(what), discrepancy_(discrepancy) {}

  double discrepancy() const noexcept { return discrepancy_; }

 private:
  double discrepancy_;
};

}  // namespace rodbend
