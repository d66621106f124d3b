#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

// Argument outside the documented domain (bad radius, exponent, grammar, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scenario/operation preconditions violated (regime mismatch, degenerate
// exponents, divergent constants). CLI maps this to exit code 3.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine could not reach its target tolerance. Carries the best
// estimate so callers can still inspect it. CLI maps this to exit code 2.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double best_estimate, double error_bound)
      : std::runtime_error(what), best(best_estimate), bound(error_bound) {}
  double best;   // best value computed before giving up
  double bound;  // estimated error of `best`
};

// Lattice / partition construction failed (uncovered sample, vanishing kernel
// on a patch, ...).
class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested computation exceeds the configured memory/size budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bergman
