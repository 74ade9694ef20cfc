#pragma once

#include <stdexcept>
#include <string>

namespace qimp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Register or matrix dimension outside the supported range.
struct SizeError : Error {
    using Error::Error;
};

/// Malformed circuit, instruction, or matrix (overlapping qubit sets,
/// out-of-range indices, dimension mismatch, ...).
struct StructuralError : Error {
    using Error::Error;
};

/// Numeric argument outside its documented domain.
struct ParameterError : Error {
    using Error::Error;
};

/// Rejected gate registration (e.g. a non-unitary matrix).
struct GateError : Error {
    using Error::Error;
};

/// A value that must be a computational basis state is not one.
struct ContractViolation : Error {
    using Error::Error;
};

/// Unreadable or unsupported image file.
struct FormatError : Error {
    using Error::Error;
};

/// Dialect text that is not in the emitted subset.
struct ParseError : Error {
    using Error::Error;
};

/// Circuit cannot be rendered in the requested dialect.
struct EmitError : Error {
    using Error::Error;
};

/// run() refused because validation produced diagnostics.
struct ValidationError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

}  // namespace qimp
