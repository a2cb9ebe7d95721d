#pragma once

#include <stdexcept>
#include <string>

namespace dqr {

// Base for every error raised by the library. The CLI maps each subclass
// to its own exit status.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text: bad JSON, bad decimal literal, wrong field type.
class ParseError : public Error {
public:
    using Error::Error;
};

// Well-formed input that violates a domain invariant (covering property,
// duplicate object names, mismatched expert reports).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Bad operator parameters: thresholds out of order, vector length mismatch,
// unknown operator id, malformed sweep grid.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Operands that do not live over the same universe.
class StructuralError : public Error {
public:
    using Error::Error;
};

} // namespace dqr
