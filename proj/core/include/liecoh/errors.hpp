#ifndef LIECOH_ERRORS_HPP
#define LIECOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liecoh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad arguments, out-of-range indices, mismatched sizes.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// An algebraic law that should hold for the given data does not.
/// Subclasses name the law; the message carries the offending basis data.
class ValidationError : public Error {
public:
    using Error::Error;
};

class JacobiViolation : public ValidationError {
public:
    JacobiViolation(std::size_t i, std::size_t j, std::size_t k, const std::string& what)
        : ValidationError(what), triple{i, j, k} {}
    std::size_t triple[3];
};

class AntisymmetryViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotADerivation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotAHomomorphism : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotACocycle : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotInvariant : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class KappaNotExact : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class CouplingViolated : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotAutomorphism : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonCommutingAutomorphisms : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OrderViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotEquivariant : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotClosed : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class WindowTooSmall : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Located parse failure in a JSON document; `path` is a JSON pointer.
class ParseError : public InvalidArgument {
public:
    ParseError(std::string path_, const std::string& what)
        : InvalidArgument(path_ + ": " + what), path(std::move(path_)) {}
    std::string path;
};

}  // namespace liecoh

#endif
