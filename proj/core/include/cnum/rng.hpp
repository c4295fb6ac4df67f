#pragma once

#include <cstdint>
#include <string_view>

#include "cnum/complete.hpp"

namespace cnum {

/// splitmix64. Fully determined by its 64-bit state and identical on every
/// platform, which is what makes law reports byte-reproducible. Law trials
/// derive one stream per (seed, law, trial index) via mix64.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next();

    /// Uniform-ish draw in [0, n); n >= 1. Modulo reduction, part of the
    /// pinned reproducibility contract.
    std::uint64_t next_below(std::uint64_t n);

private:
    std::uint64_t state_;
};

/// Deterministic 64-bit combiner used to derive per-trial substreams.
std::uint64_t mix64(std::uint64_t a, std::uint64_t b) noexcept;

/// FNV-1a over bytes; used to salt streams with a law identifier.
std::uint64_t fnv1a64(std::string_view text) noexcept;

// Value generators. Draw order is part of the reproducibility contract:
// a rational draws numerator then denominator; a complex draws re then im;
// a complete number draws vast then calp; an indexed value draws the index
// bit first. |numerator| <= bound and 1 <= denominator <= bound, before
// canonicalization.
Rational gen_rational(SplitMix64& rng, int magnitude_bound);
Complex gen_complex(SplitMix64& rng, int magnitude_bound);
CompleteNumber gen_complete(SplitMix64& rng, int magnitude_bound);
IndexedComplex gen_indexed(SplitMix64& rng, int magnitude_bound);

}  // namespace cnum
