#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "cnum/rational.hpp"

namespace cnum {

/// Gaussian rational: an exact complex number with rational components.
class Complex {
public:
    Complex() = default;  // 0 + 0i
    Complex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(long re, long im) : re_(re), im_(im) {}

    static Complex zero() { return {}; }
    static Complex one() { return {1, 0}; }
    static Complex imaginary_unit() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Complex operator-() const { return {-re_, -im_}; }
    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    /// Throws ZeroComplexDivisor when b = 0.
    friend Complex operator/(const Complex& a, const Complex& b);

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_;
    Rational im_;
};

Complex conjugate(const Complex& a);

/// re^2 + im^2, the squared modulus.
Rational squared_modulus(const Complex& a);

/// Exact modulus of a complex number: the radicand re^2 + im^2 together with
/// its exact square root when that radicand is the square of a rational.
/// Radicals are display-only; they are never operands.
struct Radical {
    Rational radicand;                    // >= 0
    std::optional<Rational> exact_root;   // root >= 0 and root^2 == radicand

    friend bool operator==(const Radical& a, const Radical& b) = default;
};

Radical modulus(const Complex& a);

/// Canonical rendering: "a+bi" / "a-bi" with zero parts omitted; 0 + 0i
/// renders "0". Rational imaginary parts keep i next to the numerator
/// ("3i/2") so the text re-parses to the same value.
std::string to_string(const Complex& a);

/// Exact root when present, otherwise "sqrt(p/q)".
std::string to_string(const Radical& r);

inline std::ostream& operator<<(std::ostream& os, const Complex& a) {
    return os << to_string(a);
}
inline std::ostream& operator<<(std::ostream& os, const Radical& r) {
    return os << to_string(r);
}

}  // namespace cnum
