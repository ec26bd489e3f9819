#pragma once

#include <stdexcept>
#include <string>

namespace becnlo {

// A scenario or argument failed validation. `field()` names the offending
// input (a JSON key, a parameter name, or an operation argument).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A numerical precondition was violated at evaluation time (grid too short,
// negative density, evaluation inside an excluded region, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative solver ran out of iterations before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& message, double residual, long iterations)
      : std::runtime_error(message), residual_(residual), iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  long iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  long iterations_;
};

}  // namespace becnlo
