#pragma once

#include <stdexcept>
#include <string>

namespace ris {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph constructor arguments out of range (cycle length < 3, empty union, ...).
struct InvalidGraphError : Error {
    using Error::Error;
};

// A vertex set refers to vertices outside its graph.
struct InvalidSetError : Error {
    using Error::Error;
};

// Parameter range violations (jump width, sizes, ...).
struct InvalidParameterError : Error {
    using Error::Error;
};

// A scan order that is not a permutation of the vertex set.
struct InvalidOrderingError : Error {
    using Error::Error;
};

// A named hypothesis of an operation does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

// An internal guarantee failed.  Reaching this is a bug, never a user error.
struct ContractViolationError : Error {
    using Error::Error;
};

// A certificate references the wrong graph/collection or is malformed.
struct InvalidCertificateError : Error {
    using Error::Error;
};

// Text input (graph descriptors, collection JSON) failed to parse.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

} // namespace ris
