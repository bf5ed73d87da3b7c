#pragma once

#include <stdexcept>
#include <string>

namespace betabounds {

/// Argument outside a function's stated domain (x <= 0 for log_gamma,
/// evaluation point outside a FunctionSpec's interval, ...).
class OutOfDomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Parameter violates a hypothesis (p <= 0, alpha outside (0,1], k <= 1, ...).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature could not certify the requested tolerance within the
/// evaluation budget.  Carries the best value reached and its error estimate.
class ToleranceNotMet : public std::runtime_error {
public:
  ToleranceNotMet(const std::string& what, double best_value,
                  double err_estimate, long evaluations)
      : std::runtime_error(what),
        best_value(best_value),
        err_estimate(err_estimate),
        evaluations(evaluations) {}

  double best_value;
  double err_estimate;
  long evaluations;
};

/// Sampled monotonicity scan found a counterexample pair (or no strict trend).
class MonotonicityError : public std::domain_error {
public:
  MonotonicityError(const std::string& what, double x1, double x2)
      : std::domain_error(what), witness_x1(x1), witness_x2(x2) {}

  double witness_x1;
  double witness_x2;
};

}  // namespace betabounds
