#include <gtest/gtest.h>

#include <stdexcept>

#include "cnum/rational.hpp"
#include "cnum/rng.hpp"

namespace cnum {
namespace {

// Canonical-form audit: denominator positive, lowest terms, zero as 0/1.
// gcd(0, d) = d, so the single gcd check also forces the zero form.
void expect_canonical(const Rational& r) {
    EXPECT_GT(r.den(), 0) << r;
    mpz_class g;
    const mpz_class num = r.num();
    const mpz_class den = r.den();
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    EXPECT_EQ(g, 1) << r;
}

TEST(Rational, CanonicalOnConstruction) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(2, 4).den(), 2);
    EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
    EXPECT_GT(Rational(1, -2).den(), 0);
    EXPECT_EQ(Rational(0, 5).den(), 1);
    EXPECT_EQ(Rational(-6, -4), Rational(3, 2));
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
    EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, DecimalText) {
    EXPECT_EQ(Rational::from_decimal_text("12"), Rational(12));
    EXPECT_EQ(Rational::from_decimal_text("2.50"), Rational(5, 2));
    EXPECT_EQ(Rational::from_decimal_text("0.1"), Rational(1, 10));
    EXPECT_EQ(Rational::from_decimal_text("0.0"), Rational(0));
    // Arbitrary precision: more digits than any machine word holds.
    const Rational big = Rational::from_decimal_text("123456789012345678901234567890");
    EXPECT_EQ(big.num().get_str(), "123456789012345678901234567890");
}

TEST(Rational, Rendering) {
    EXPECT_EQ(Rational(7).str(), "7");
    EXPECT_EQ(Rational(-7).str(), "-7");
    EXPECT_EQ(Rational(3, 2).str(), "3/2");
    EXPECT_EQ(Rational(-3, 2).str(), "-3/2");
    EXPECT_EQ(Rational(0).str(), "0");
}

TEST(Rational, ExactSqrt) {
    EXPECT_EQ(Rational(25).exact_sqrt(), Rational(5));
    EXPECT_EQ(Rational(4, 9).exact_sqrt(), Rational(2, 3));
    EXPECT_EQ(Rational(0).exact_sqrt(), Rational(0));
    EXPECT_FALSE(Rational(2).exact_sqrt().has_value());
    EXPECT_FALSE(Rational(1, 2).exact_sqrt().has_value());
    EXPECT_FALSE(Rational(-4).exact_sqrt().has_value());
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(1, 2), Rational(-1, 2));
    EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

TEST(Rational, CanonicalClosureRandomized) {
    SplitMix64 rng(0x5EEDull);
    for (int trial = 0; trial < 10000; ++trial) {
        const Rational a = gen_rational(rng, 50);
        const Rational b = gen_rational(rng, 50);
        expect_canonical(a + b);
        expect_canonical(a - b);
        expect_canonical(a * b);
        if (!b.is_zero()) expect_canonical(a / b);
    }
}

}  // namespace
}  // namespace cnum
