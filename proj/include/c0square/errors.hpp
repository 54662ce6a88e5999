#pragma once

#include <stdexcept>
#include <string>

namespace c0square {

// Base class for every failure this library reports.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation at (or too near) a pole of a rational expression.
struct domain_error : error {
  using error::error;
};

// Operation requires a model space of higher dimension (degree >= 2).
struct dimension_error : error {
  using error::error;
};

// Requested Moebius factor does not divide the product.
struct divisor_error : error {
  using error::error;
};

// Numerical rank / positivity decision sits inside the ambiguity band,
// or zeros are too close to the unit circle for the quadrature to resolve.
struct conditioning_error : error {
  using error::error;
};

// Two routes that must agree (algebraic identity vs. recomputation) did not.
struct consistency_error : error {
  using error::error;
};

// Randomized search exhausted its retry budget on a generic-position event.
struct search_error : error {
  using error::error;
};

// A precondition documented on the operation was violated by the caller.
struct precondition_error : error {
  using error::error;
};

// Input document is not well-formed (CLI exit code 2).
struct parse_error : error {
  using error::error;
};

// Input document is well-formed but violates the input contract (exit code 3).
struct validation_error : error {
  using error::error;
};

}  // namespace c0square
