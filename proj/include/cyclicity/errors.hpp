#pragma once

#include <stdexcept>
#include <string>

namespace cyclicity {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// a required Lie-derivative divisor is (numerically) zero
struct ResonanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a leading monomial carries an Omega factor where none is allowed
struct OmegaBigPresent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a sum does not match the required displacement-map shape
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PEqualsOne : ShapeError {
    using ShapeError::ShapeError;
};

struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MissingConcreteRemainder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateA : DomainError {
    using DomainError::DomainError;
};

struct DegreeOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct StiffnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositionDomainError : DomainError {
    using DomainError::DomainError;
};

// carries the JSON-pointer path of the offending field
struct SchemaError : std::runtime_error {
    std::string pointer;
    SchemaError(const std::string& ptr, const std::string& what)
        : std::runtime_error(ptr + ": " + what), pointer(ptr) {}
};

}  // namespace cyclicity
