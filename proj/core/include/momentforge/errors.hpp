#pragma once

#include <stdexcept>

namespace momentforge {

/// Malformed or out-of-contract input (maps to CLI exit code 2).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration cap was exceeded (maps to CLI exit code 3).
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace momentforge
