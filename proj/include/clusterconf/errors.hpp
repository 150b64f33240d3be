#pragma once

#include <stdexcept>
#include <string>

namespace clusterconf {

// Bad data handed to an operation (malformed partition, colliding points, ...).
// The CLI maps this to exit code 1.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A request that is well-formed but outside the configured enumeration bounds,
// or that cannot be certified complete. The CLI maps this to exit code 2 and
// still emits whatever partial output was certified.
struct infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (d^2 != 0, stability certificate
// violated inside its certified range, ...). Never caught: if this fires the
// maths or the code is wrong and no output should be trusted.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace clusterconf
