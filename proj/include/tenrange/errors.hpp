#pragma once

#include <stdexcept>

namespace tenrange {

// Malformed tensor documents, CSV, or CLI input.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solver non-convergence or singular-to-tolerance input.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tenrange
