#pragma once

#include <stdexcept>
#include <string>

namespace nonwander {

// Numerical failures (divergence, missing brackets, refinement breakdown).
// Exit code 3 territory for the CLI; validation errors stay std::invalid_argument.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orbit left the working region (|x| beyond the escape radius).
struct EscapeError : NumericalError {
  explicit EscapeError(long steps_done)
      : NumericalError("orbit escaped after " + std::to_string(steps_done) + " steps"),
        steps(steps_done) {}
  long steps = 0;
};

// A sign-change bracket for bisection did not hold.
struct BracketError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace nonwander
