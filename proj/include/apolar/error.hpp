#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mathematical preconditions that fail on valid input (singular forms,
/// excluded parameters, mismatched fields, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input.
class InputError : public Error {
public:
    using Error::Error;
};

#define APOLAR_DEFINE_ERROR(Name, Base)  \
    class Name : public Base {           \
    public:                              \
        using Base::Base;                \
    };

APOLAR_DEFINE_ERROR(FieldMismatch, DomainError)
APOLAR_DEFINE_ERROR(DivisionByZero, DomainError)
APOLAR_DEFINE_ERROR(NotInvertible, DomainError)
APOLAR_DEFINE_ERROR(NotSquarefree, DomainError)
APOLAR_DEFINE_ERROR(ArityMismatch, DomainError)
APOLAR_DEFINE_ERROR(IndexOutOfRange, DomainError)
APOLAR_DEFINE_ERROR(NotHomogeneous, DomainError)
APOLAR_DEFINE_ERROR(DegreeMismatch, DomainError)
APOLAR_DEFINE_ERROR(ZeroPolynomial, DomainError)
APOLAR_DEFINE_ERROR(SingularMatrix, DomainError)
APOLAR_DEFINE_ERROR(NotGorenstein, DomainError)
APOLAR_DEFINE_ERROR(DegreeTooLow, DomainError)
APOLAR_DEFINE_ERROR(NotSmooth, DomainError)
APOLAR_DEFINE_ERROR(SizeLimitExceeded, DomainError)
APOLAR_DEFINE_ERROR(PoleAtPoint, DomainError)
APOLAR_DEFINE_ERROR(ExcludedParameter, DomainError)
APOLAR_DEFINE_ERROR(DegenerateCrossRatio, DomainError)
APOLAR_DEFINE_ERROR(CoincidentPoints, DomainError)
APOLAR_DEFINE_ERROR(SingularForm, DomainError)
APOLAR_DEFINE_ERROR(SingularMember, DomainError)

APOLAR_DEFINE_ERROR(UnknownVariable, InputError)

#undef APOLAR_DEFINE_ERROR

/// Parse failure with a 1-based source position.
class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : InputError(what + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace apolar
