#pragma once

#include <stdexcept>
#include <string>

namespace sigrect {

// Index outside the ambient matrix/tensor.
struct BoundsError : std::out_of_range {
    explicit BoundsError(const std::string& what) : std::out_of_range(what) {}
};

// Shapes of two objects do not match (e.g. decomposition vs matrix).
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured cap was exceeded (independence cap, enumeration dimension cap).
// The message names the cap and its value.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Input data violates a documented precondition (bad entry value, bad sign, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sigrect
