#pragma once

#include <stdexcept>
#include <string>

namespace wsgreedy {

// Invalid configuration or arguments (CLI exit code 2).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input data (CLI exit code 3).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solver cannot make progress: no candidate improves the objective (CLI exit code 4).
struct StallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive enumeration would exceed the configured guard (CLI exit code 5).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wsgreedy
