#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace cnum {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Always in canonical form: denominator > 0, gcd(|num|, den) = 1, and zero
/// stored as 0/1. Every operation preserves canonical form.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Exact conversion of a decimal literal: "12", "2.50" (= 5/2). The text
    /// must be digits with an optional '.' and digits; no sign.
    static Rational from_decimal_text(const std::string& text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    Rational abs() const;

    /// The exact square root, present iff *this is the square of a rational.
    /// Requires *this >= 0.
    std::optional<Rational> exact_sqrt() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws std::domain_error when b is zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Canonical rendering: "p/q", with "/q" omitted when q = 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // invariant: canonical
};

}  // namespace cnum
