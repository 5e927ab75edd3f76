#pragma once

#include <stdexcept>
#include <string>

namespace mcz {

/// Non-invertible element: some idempotent component vanishes.
struct zero_divisor_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Evaluation requested at (or too close to) a pole.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A configurable search or scan bound was exceeded.
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mcz
