#pragma once

#include <stdexcept>
#include <string>

namespace loopwork {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-data errors: the object under inspection is not what the operation
// needs. These behave as failed checks, not as usage mistakes.
struct NotLatinError : Error {
    using Error::Error;
};
struct NoIdentityError : Error {
    using Error::Error;
};
struct MalformedError : Error {
    using Error::Error;
};
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Usage / hypothesis errors: the request itself cannot be evaluated.
struct OrderMismatchError : Error {
    using Error::Error;
};
struct BoundExceededError : Error {
    using Error::Error;
};
struct HypothesisFailedError : Error {
    using Error::Error;
};
struct NotAGroupError : Error {
    using Error::Error;
};
struct UnknownVertexError : Error {
    using Error::Error;
};
struct UnknownLoopError : Error {
    using Error::Error;
};
struct BadFilterError : Error {
    using Error::Error;
};

// The two printed expressions for the gamma23-circle word disagree at the
// given parameters. Reported as a hypothesis failure, never a crash.
struct Gamma23MismatchError : Error {
    using Error::Error;
};

}  // namespace loopwork
