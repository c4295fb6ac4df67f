#include "cnum/rational.hpp"

#include <stdexcept>

namespace cnum {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(long num, long den) : q_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(make_canonical(num, den)) {}

Rational Rational::from_decimal_text(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        return Rational(mpz_class(text), mpz_class(1));
    }
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    return Rational(mpz_class(digits), den);
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class n = num();
    const mpz_class d = den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    return Rational(mpq_class(a.q_ / b.q_));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace cnum
