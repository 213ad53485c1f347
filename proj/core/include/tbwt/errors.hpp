#pragma once

#include <stdexcept>
#include <string>

namespace tbwt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input data or arguments (bad interval, out-of-range order, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// File system problems while reading or writing.
struct IoError : Error {
    using Error::Error;
};

/// A serialized structure violates one of its declared invariants.
struct CorruptFileError : Error {
    using Error::Error;
};

/// A broken internal consistency condition; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace tbwt
