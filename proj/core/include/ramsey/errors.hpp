#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// One error kind per contract violation named in the module interfaces.
enum class ErrorKind {
    NonPrimeModulus,
    ZeroInput,
    ZeroDenominator,
    SyntaxError,
    EmptyEquation,
    BadParameters,
    MissingVariable,
    NonPositiveValue,
    FormatError,
    PreconditionViolated,
    ZeroCoefficient,
    CapExceeded,
    ConstantTerm,
    NotAPythagoreanTriple,
    NonIntegralWitness,
    DivisibilityViolated,
    BadIndex,
    OutOfDomain,
    NotSatisfying,
    IncoherentOneHot,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failures carry the byte offset of the offending character.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(ErrorKind::SyntaxError, what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace ramsey
