#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cnum {

/// Base class for every error the library reports. `kind()` is a stable
/// machine-readable identifier (it is what the CLI puts into JSON output);
/// `position()` is a byte offset into the source text when one exists.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message,
          std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(message), kind_(std::move(kind)), position_(position) {}

    const std::string& kind() const noexcept { return kind_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    std::string kind_;
    std::optional<std::size_t> position_;
};

/// Bare-index division with two different indices. Mixed-index quotients are
/// only defined once complex payloads are attached; callers route them
/// through complete-number division.
class MixedIndexDivision : public Error {
public:
    explicit MixedIndexDivision(const std::string& message)
        : Error("mixed_index_division", message) {}
};

/// Division of an un-indexed complex number by 0. At this layer plain zero
/// division is an error; the index-transforming rules live one layer up.
class ZeroComplexDivisor : public Error {
public:
    explicit ZeroComplexDivisor(const std::string& message)
        : Error("zero_complex_divisor", message) {}
};

/// Complete-number division whose divisor has a cancelling part sum. No rule
/// assigns such a quotient a value, so it is refused.
class SingularDenominator : public Error {
public:
    explicit SingularDenominator(const std::string& message)
        : Error("singular_denominator", message) {}
};

/// up(...)/down(...)/|...| applied to a full two-part value. These operators
/// require a pure indexed operand.
class RetagOfFull : public Error {
public:
    explicit RetagOfFull(const std::string& message)
        : Error("retag_of_full", message) {}
};

/// |...| whose exact value is not a rational; the expression language has no
/// radical operands, so the result cannot be represented.
class IrrationalModulus : public Error {
public:
    explicit IrrationalModulus(const std::string& message)
        : Error("irrational_modulus", message) {}
};

class LexError : public Error {
public:
    LexError(const std::string& message, std::size_t position)
        : Error("lex_error", message, position) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error("parse_error", message, position) {}
};

class UnknownLaw : public Error {
public:
    explicit UnknownLaw(const std::string& message) : Error("unknown_law", message) {}
};

}  // namespace cnum
