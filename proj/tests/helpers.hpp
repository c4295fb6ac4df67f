#pragma once

#include "cnum/complete.hpp"

namespace cnum::testing {

inline Complex c(long re, long im) { return {re, im}; }

inline Complex cq(long re_num, long re_den, long im_num, long im_den) {
    return {Rational(re_num, re_den), Rational(im_num, im_den)};
}

inline IndexedComplex up(Complex v) { return {Index::Vastavic, std::move(v)}; }
inline IndexedComplex up(long re, long im) { return up(Complex(re, im)); }
inline IndexedComplex dn(Complex v) { return {Index::Calpanic, std::move(v)}; }
inline IndexedComplex dn(long re, long im) { return dn(Complex(re, im)); }

inline CompleteNumber cn(Complex vast, Complex calp) {
    return {std::move(vast), std::move(calp)};
}
inline CompleteNumber cn(long a, long b, long m, long n) {
    return {Complex(a, b), Complex(m, n)};
}

}  // namespace cnum::testing
