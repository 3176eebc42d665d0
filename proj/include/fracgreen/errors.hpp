#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracgreen {

// Root of every failure raised by the library. The CLI maps subclasses onto
// its exit-code contract, so new error kinds should derive from the closest
// existing category rather than from Error directly.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: parameter bounds, malformed problem files, bad expressions.
class InputError : public Error {
public:
    using Error::Error;
};

class InvalidSpecError : public InputError {
public:
    using InputError::InputError;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class OffGridError : public Error {
public:
    using Error::Error;
};

class TooShortError : public Error {
public:
    using Error::Error;
};

class GridMismatchError : public Error {
public:
    using Error::Error;
};

class NonFiniteError : public Error {
public:
    using Error::Error;
};

class NegativeWeightError : public InputError {
public:
    using InputError::InputError;
};

// Series or iteration did not settle within its budget.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

class DivergenceError : public NonConvergenceError {
public:
    using NonConvergenceError::NonConvergenceError;
};

class StagnationError : public NonConvergenceError {
public:
    using NonConvergenceError::NonConvergenceError;
};

// The boundary value problem (or a linear system derived from it) has no
// unique solution.
class SingularError : public Error {
public:
    using Error::Error;
};

class SingularProblemError : public SingularError {
public:
    using SingularError::SingularError;
};

class SingularMatrixError : public SingularError {
public:
    using SingularError::SingularError;
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownIdentifierError : public InputError {
public:
    using InputError::InputError;
};

class MissingBindingError : public InputError {
public:
    using InputError::InputError;
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace fracgreen
