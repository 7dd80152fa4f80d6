#pragma once

#include <stdexcept>
#include <string>

namespace rheat {

// Point outside the validity region of a formula or routine.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Bad parameters or configuration; maps to exit code 2 in the CLI.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Non-finite input or output.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by reconstruct when (G,H) is not integrable.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rheat
