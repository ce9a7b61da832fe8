#ifndef LAPASYM_ERRORS_HPP
#define LAPASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lapasym {

/// Argument outside the domain of an operation (bad p, q, theta, regime, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Digamma evaluated at zero or a negative integer.
class PoleError : public DomainError {
public:
  explicit PoleError(const std::string& what, double location)
      : DomainError(what), location_(location) {}
  double location() const noexcept { return location_; }

private:
  double location_;
};

/// A summand or kernel denominator vanished (|d| < 1e-300).
class SingularityError : public std::runtime_error {
public:
  SingularityError(const std::string& what, double x, double y)
      : std::runtime_error(what), x_(x), y_(y) {}
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

private:
  double x_;
  double y_;
};

/// Adaptive quadrature hit its subdivision limit; carries the partial result.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double partial_value, double error_estimate)
      : std::runtime_error(what), partial_value_(partial_value), error_estimate_(error_estimate) {}
  double partial_value() const noexcept { return partial_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

private:
  double partial_value_;
  double error_estimate_;
};

/// Least-squares fit could not be carried out (rank deficiency, bad ladder).
class FitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A bound that holds mathematically was violated; indicates a bug.
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed lattice file, CLI flag or run configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Output file could not be opened or written.
class IOError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace lapasym

#endif  // LAPASYM_ERRORS_HPP
