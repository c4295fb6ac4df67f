#include "cnum/complex.hpp"

#include "cnum/errors.hpp"

namespace cnum {

Complex operator+(const Complex& a, const Complex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
}

Complex operator-(const Complex& a, const Complex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
}

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Complex operator/(const Complex& a, const Complex& b) {
    const Rational n = squared_modulus(b);
    if (n.is_zero()) {
        throw ZeroComplexDivisor("complex division by 0");
    }
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
}

Complex conjugate(const Complex& a) { return {a.re(), -a.im()}; }

Rational squared_modulus(const Complex& a) {
    return a.re() * a.re() + a.im() * a.im();
}

Radical modulus(const Complex& a) {
    Radical r{squared_modulus(a), std::nullopt};
    r.exact_root = r.radicand.exact_sqrt();
    return r;
}

namespace {

// Imaginary term with the coefficient kept next to i ("10i", "3i/2") so the
// canonical text re-parses to the same value.
std::string imag_text(const Rational& im_abs) {
    const std::string n = im_abs.num().get_str() + "i";
    if (im_abs.den() == 1) return n;
    return n + "/" + im_abs.den().get_str();
}

}  // namespace

std::string to_string(const Complex& a) {
    if (a.is_zero()) return "0";
    if (a.im().is_zero()) return a.re().str();
    const std::string imag = imag_text(a.im().abs());
    if (a.re().is_zero()) {
        return a.im().sign() < 0 ? "-" + imag : imag;
    }
    return a.re().str() + (a.im().sign() < 0 ? "-" : "+") + imag;
}

std::string to_string(const Radical& r) {
    if (r.exact_root) return r.exact_root->str();
    return "sqrt(" + r.radicand.str() + ")";
}

}  // namespace cnum
