#pragma once

#include <stdexcept>
#include <string>

namespace dklein {

/* Base class for everything thrown by this library. */
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Malformed textual input (scalar/polynomial/word grammars, CLI flags). */
struct parse_error : error {
  using error::error;
};

/* A documented precondition was violated by the caller. */
struct precondition_error : error {
  using error::error;
};

/* Division by zero in the scalar field. */
struct division_by_zero : precondition_error {
  division_by_zero() : precondition_error("division by zero") {}
};

/* Asking for the degree of the zero element/polynomial. */
struct zero_element_error : precondition_error {
  using precondition_error::precondition_error;
};

/* An internal guarantee failed: this is a bug, not a usage error. */
struct invariant_violation : error {
  using error::error;
};

}  // namespace dklein
