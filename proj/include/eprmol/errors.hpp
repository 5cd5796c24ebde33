#pragma once

#include <stdexcept>
#include <string>

namespace eprmol {

/// Bad caller input: non-positive physical constants, empty sequences,
/// malformed ranges. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at (or numerically indistinguishable from) a node of the
/// amplitude, where D(x) = 0 and the closed forms blow up.
class SingularityError : public std::domain_error {
public:
  SingularityError(const std::string& what, double x)
      : std::domain_error(what), x_(x) {}

  double position() const noexcept { return x_; }

private:
  double x_;
};

/// dt/dx vanishes: the trajectory is at a turning point and the
/// mechanical velocity is unbounded.
class InfiniteVelocityError : public SingularityError {
public:
  using SingularityError::SingularityError;
};

/// A numerical procedure could not deliver a trustworthy result
/// (step below precision, non-finite intermediate, no convergence).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace eprmol
