#include "cnum/rng.hpp"

namespace cnum {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t n) { return next() % n; }

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t z = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

Rational gen_rational(SplitMix64& rng, int magnitude_bound) {
    const auto bound = static_cast<std::uint64_t>(magnitude_bound);
    const long num = static_cast<long>(rng.next_below(2 * bound + 1)) - magnitude_bound;
    const long den = static_cast<long>(1 + rng.next_below(bound));
    return {num, den};
}

Complex gen_complex(SplitMix64& rng, int magnitude_bound) {
    Rational re = gen_rational(rng, magnitude_bound);
    Rational im = gen_rational(rng, magnitude_bound);
    return {std::move(re), std::move(im)};
}

CompleteNumber gen_complete(SplitMix64& rng, int magnitude_bound) {
    Complex vast = gen_complex(rng, magnitude_bound);
    Complex calp = gen_complex(rng, magnitude_bound);
    return {std::move(vast), std::move(calp)};
}

IndexedComplex gen_indexed(SplitMix64& rng, int magnitude_bound) {
    const Index idx = rng.next_below(2) == 0 ? Index::Vastavic : Index::Calpanic;
    return {idx, gen_complex(rng, magnitude_bound)};
}

}  // namespace cnum
