#pragma once

#include <stdexcept>
#include <string>

namespace ihss {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unsupported (family, rank) pair or malformed catalog parameters.
struct ConstructionError : Error {
    using Error::Error;
};

// Caller violated a documented precondition.
struct ContractViolation : Error {
    using Error::Error;
};

// Malformed space spec string or bad CLI usage.
struct ParseError : Error {
    using Error::Error;
};

// Operation has no closed form for this space; the oracle path applies.
struct UnsupportedOperation : Error {
    using Error::Error;
};

// Enumeration guard tripped.
struct ResourceLimit : Error {
    using Error::Error;
};

// A "must never fire" internal consistency check fired.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ihss
