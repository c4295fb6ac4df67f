#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnum/complete.hpp"

namespace cnum {

/// Name of the pinned generator; recorded in every report.
inline constexpr std::string_view kLawRngName = "splitmix64";

struct TrialConfig {
    std::uint64_t seed = 42;
    int trials = 10000;
    int magnitude_bound = 10;  // max |numerator| and denominator of generated rationals
    Mode mode = Mode::Strict;
};

enum class LawStatus { Pass, Fail, WitnessFound, Vacuous };

std::string_view to_string(LawStatus s) noexcept;  // "pass" | "fail" | "witness_found" | "vacuous"

/// Outcome of one law check. Same config, same report, bit for bit.
/// status == Fail implies a counterexample is present; status == Vacuous
/// iff trials_run == 0. For witness searches the counterexample field
/// carries the witness instead.
struct LawReport {
    std::string law_id;
    LawStatus status = LawStatus::Vacuous;
    int trials_run = 0;
    int skipped = 0;  // div_roundtrip: divisors with zero shadow, skipped not failed
    std::uint64_t seed = 0;
    std::optional<std::string> counterexample;            // canonical text rendering
    std::vector<CompleteNumber> counterexample_operands;  // structural form, for replay

    friend bool operator==(const LawReport& a, const LawReport& b) = default;
};

/// Suite order. Identifiers:
///   add_comm, add_assoc       commutativity / associativity of +
///   mul_assoc                 associativity of *
///   left_distrib              a(b + c) = ab + ac
///   mul_noncomm               witness search: ab != ba, with the fixed pair
///                             (up(1), down(1)) always checked, plus the
///                             universal check shadow(ab) = shadow(ba)
///   div_roundtrip             b * (a / b) = a, zero-shadow divisors skipped
///   right_distrib             (b + c)a = ba + ca
///   shadow_hom                shadow is additive and multiplicative
///   left_identity_family      shadow(e) = 1 implies e * x = x
///   index_right_projection    the 4-entry index product table, exhaustive
inline constexpr std::array<std::string_view, 10> kLawOrder = {
    "add_comm",      "add_assoc",  "mul_assoc",           "left_distrib",
    "mul_noncomm",   "div_roundtrip", "right_distrib",    "shadow_hom",
    "left_identity_family", "index_right_projection",
};

/// Runs one law. Universal laws report Pass only if every trial holds with
/// exact equality. Throws UnknownLaw for unrecognized identifiers.
LawReport check_law(std::string_view law_id, const TrialConfig& config);

/// Generic randomized universal check: `arity` complete numbers per trial,
/// one derived substream per trial. Exposed so harness behavior (including
/// counterexample reporting) can be exercised against arbitrary predicates.
LawReport check_universal(std::string_view law_id, int arity, const TrialConfig& config,
                          const std::function<bool(std::span<const CompleteNumber>)>& holds);

/// Every law in kLawOrder, in that order.
std::vector<LawReport> run_suite(const TrialConfig& config);

/// True iff every universal law passed and mul_noncomm found its witness.
bool suite_passed(std::span<const LawReport> reports);

/// JSON document: an array of objects with keys law_id, status, trials_run,
/// seed, skipped, counterexample (null when absent) and rng. Byte-stable for
/// a given input.
std::string reports_to_json(std::span<const LawReport> reports);

}  // namespace cnum
