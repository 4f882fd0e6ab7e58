#pragma once

#include <stdexcept>
#include <string>

namespace char1 {

// Exit-code mapping used by the CLI: Validation/Domain/Precondition/Input -> 1,
// Accuracy -> 2. Internal errors indicate a bug and also map to 1.

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace char1
