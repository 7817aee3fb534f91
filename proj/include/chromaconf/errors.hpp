#ifndef CHROMACONF_ERRORS_HPP
#define CHROMACONF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chromaconf {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed text, out-of-range vertex, invalid argument
// combination. CLI exit code 1.
struct InvalidArgument : Error {
    using Error::Error;
};

// Text that failed to parse (edge lists, builder expressions, spec files).
struct ParseError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// A computation refused because it would exceed a configured resource
// guard. CLI exit code 2.
struct GuardExceeded : Error {
    using Error::Error;
};

// A mathematical identity that must hold by theorem failed to hold.
// This always indicates a bug (or deliberately corrupted data in the
// verification harness). CLI exit code 3.
struct InternalError : Error {
    using Error::Error;
};

} // namespace chromaconf

#endif
