#ifndef SO3FIVE_ERRORS_HPP
#define SO3FIVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace so3five {

// All library failures are typed exceptions rooted here.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two polynomials (or a binding) refer to different variable environments,
// or a variable name is not part of the environment.
class EnvError : public Error {
public:
    using Error::Error;
};

// Matrix dimensions incompatible with the requested operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Input outside the mathematical domain of the operation (zero divisor,
// zero quaternion, zero normalization constant, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Guard against runaway symbolic computation (total degree cap).
class ResourceError : public Error {
public:
    using Error::Error;
};

// An internal algebraic identity that must hold by construction failed.
// Indicates a transcription or construction bug, never bad user input.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

// Input data does not carry the structure the operation presupposes
// (e.g. a tensor that is not a valid irreducible SO(3) structure).
class StructureError : public Error {
public:
    using Error::Error;
};

// Name lookup failed (catalog entries and similar).
class LookupError : public Error {
public:
    using Error::Error;
};

// Malformed external data (catalog file, polynomial text).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace so3five

#endif
