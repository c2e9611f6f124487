#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sympoly {

// Base of every library error.  `code()` is a stable machine-readable
// identifier of the form "<area>.<kind>" used by the CLI for diagnostics
// and exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct AmbientMismatchError : Error {
    explicit AmbientMismatchError(const std::string& message)
        : Error("poly.ambient_mismatch", message) {}
};

struct ZeroDenominatorError : Error {
    explicit ZeroDenominatorError(const std::string& message)
        : Error("rational.zero_denominator", message) {}
};

struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& message)
        : Error("poly.zero_polynomial", message) {}
};

struct ZeroInputError : Error {
    explicit ZeroInputError(const std::string& message)
        : Error("symmetry.zero_input", message) {}
};

struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& message)
        : Error("elementary.out_of_range", message) {}
};

struct NotSortedError : Error {
    explicit NotSortedError(const std::string& message)
        : Error("decompose.not_sorted", message) {}
};

struct ZeroDegreeError : Error {
    explicit ZeroDegreeError(const std::string& message)
        : Error("decompose.zero_degree", message) {}
};

struct SizeGuardError : Error {
    explicit SizeGuardError(std::string code, const std::string& message)
        : Error(std::move(code), message) {}
};

// Parse-time errors carry a 0-based character offset into the source text.
class ParseError : public Error {
public:
    ParseError(std::string code, std::size_t offset, const std::string& message)
        : Error(std::move(code), message), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

struct SyntaxError : ParseError {
    SyntaxError(std::size_t offset, const std::string& message)
        : ParseError("parse.syntax", offset, message) {}
};

struct ExponentNegativeError : ParseError {
    explicit ExponentNegativeError(std::size_t offset)
        : ParseError("parse.exponent_negative", offset,
                     "negative exponents are not part of the grammar") {}
};

struct VariableIndexZeroError : ParseError {
    explicit VariableIndexZeroError(std::size_t offset)
        : ParseError("parse.variable_index_zero", offset,
                     "variable indices start at 1") {}
};

struct IndexExceedsAmbientError : ParseError {
    IndexExceedsAmbientError(std::size_t offset, const std::string& message)
        : ParseError("parse.index_exceeds_ambient", offset, message) {}
};

struct MixedVariableKindsError : ParseError {
    MixedVariableKindsError(std::size_t offset, const std::string& message)
        : ParseError("parse.mixed_variable_kinds", offset, message) {}
};

}  // namespace sympoly
