#pragma once

#include <stdexcept>
#include <string>

namespace minkq {

// Precondition violated (bad argument domain).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input table/cache does not cover the requested range.
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Configured resource cap exceeded (tree depth, exact-dyadic size, sample counts).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Discretization too coarse for the requested tolerance.
struct resolution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iteration failed to reach tolerance; message carries the last achieved spread.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace minkq
