#ifndef RATSER_ERRORS_HPP
#define RATSER_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ratser {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input file / literal syntax errors.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("scalars belong to different fields") {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

class DivideByZero : public Error {
public:
    DivideByZero() : Error("division by zero") {}
};

class NotPrime : public Error {
public:
    explicit NotPrime(std::uint64_t p) : Error("not a prime: " + std::to_string(p)) {}
};

class NotMinimal : public Error {
public:
    explicit NotMinimal(const std::string& msg) : Error("representation not minimal: " + msg) {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& msg) : Error("enumeration budget exceeded: " + msg) {}
};

class NotUnary : public Error {
public:
    NotUnary() : Error("operation requires a one-letter alphabet") {}
};

class NonRationalField : public Error {
public:
    NonRationalField() : Error("operation requires the rational field") {}
};

class StarOnNonproper : public Error {
public:
    StarOnNonproper() : Error("star of a series with nonzero constant coefficient") {}
};

class EmptyWordInLanguage : public Error {
public:
    EmptyWordInLanguage() : Error("language contains the empty word") {}
};

class QZeroAtOrigin : public Error {
public:
    QZeroAtOrigin() : Error("denominator vanishes at 0") {}
};

class NotUnambiguous : public Error {
public:
    NotUnambiguous() : Error("expression carries a non-unambiguous operation node") {}
};

} // namespace ratser

#endif // RATSER_ERRORS_HPP
