#include "cnum/laws.hpp"

#include <json.hpp>

#include "cnum/errors.hpp"
#include "cnum/rng.hpp"

namespace cnum {

namespace {

void validate(const TrialConfig& config) {
    if (config.magnitude_bound < 1) {
        throw std::invalid_argument("magnitude_bound must be >= 1");
    }
}

SplitMix64 trial_stream(const TrialConfig& config, std::string_view law_id, std::uint64_t trial) {
    return SplitMix64(mix64(mix64(config.seed, fnv1a64(law_id)), trial));
}

std::string operands_text(std::span<const CompleteNumber> operands) {
    std::string out;
    for (std::size_t k = 0; k < operands.size(); ++k) {
        if (k > 0) out += "; ";
        out += "psi" + std::to_string(k + 1) + " = " + to_string(operands[k]);
    }
    return out;
}

LawReport base_report(std::string_view law_id, const TrialConfig& config) {
    LawReport r;
    r.law_id = std::string(law_id);
    r.seed = config.seed;
    return r;
}

LawReport check_div_roundtrip(const TrialConfig& config) {
    LawReport r = base_report("div_roundtrip", config);
    for (int trial = 0; trial < config.trials; ++trial) {
        auto rng = trial_stream(config, "div_roundtrip", static_cast<std::uint64_t>(trial));
        const CompleteNumber dividend = gen_complete(rng, config.magnitude_bound);
        const CompleteNumber divisor = gen_complete(rng, config.magnitude_bound);
        if (shadow(divisor).is_zero()) {
            ++r.skipped;
            continue;
        }
        ++r.trials_run;
        if (!(divisor * (dividend / divisor) == dividend)) {
            r.status = LawStatus::Fail;
            r.counterexample_operands = {dividend, divisor};
            r.counterexample = operands_text(r.counterexample_operands);
            return r;
        }
    }
    r.status = r.trials_run == 0 ? LawStatus::Vacuous : LawStatus::Pass;
    return r;
}

LawReport check_left_identity_family(const TrialConfig& config) {
    LawReport r = base_report("left_identity_family", config);
    for (int trial = 0; trial < config.trials; ++trial) {
        auto rng = trial_stream(config, "left_identity_family", static_cast<std::uint64_t>(trial));
        const CompleteNumber operand = gen_complete(rng, config.magnitude_bound);
        const Complex vast = gen_complex(rng, config.magnitude_bound);
        const CompleteNumber identity{vast, Complex::one() - vast};  // shadow = 1
        ++r.trials_run;
        if (!(identity * operand == operand)) {
            r.status = LawStatus::Fail;
            r.counterexample_operands = {identity, operand};
            r.counterexample = operands_text(r.counterexample_operands);
            return r;
        }
    }
    r.status = r.trials_run == 0 ? LawStatus::Vacuous : LawStatus::Pass;
    return r;
}

LawReport check_mul_noncomm(const TrialConfig& config) {
    LawReport r = base_report("mul_noncomm", config);
    if (config.trials <= 0) return r;
    for (int trial = 0; trial < config.trials; ++trial) {
        auto rng = trial_stream(config, "mul_noncomm", static_cast<std::uint64_t>(trial));
        const CompleteNumber a = gen_complete(rng, config.magnitude_bound);
        const CompleteNumber b = gen_complete(rng, config.magnitude_bound);
        ++r.trials_run;
        // Universal part: both products share the shadow shadow(a)*shadow(b).
        if (!(shadow(a * b) == shadow(b * a))) {
            r.status = LawStatus::Fail;
            r.counterexample_operands = {a, b};
            r.counterexample = operands_text(r.counterexample_operands);
            return r;
        }
    }
    // The fixed witness pair (up(1), down(1)).
    const CompleteNumber up_one = embed({Index::Vastavic, Complex::one()});
    const CompleteNumber down_one = embed({Index::Calpanic, Complex::one()});
    const CompleteNumber forward = up_one * down_one;
    const CompleteNumber backward = down_one * up_one;
    r.counterexample_operands = {up_one, down_one};
    r.counterexample = operands_text(r.counterexample_operands) +
                       "; psi1*psi2 = " + to_string(forward) +
                       "; psi2*psi1 = " + to_string(backward);
    if (forward == backward) {
        r.status = LawStatus::Fail;
        return r;
    }
    r.status = LawStatus::WitnessFound;
    return r;
}

LawReport check_index_right_projection(const TrialConfig& config) {
    LawReport r = base_report("index_right_projection", config);
    if (config.trials <= 0) return r;
    for (const Index a : {Index::Vastavic, Index::Calpanic}) {
        for (const Index b : {Index::Vastavic, Index::Calpanic}) {
            ++r.trials_run;
            if (index_mul(a, b) != b) {
                r.status = LawStatus::Fail;
                r.counterexample = std::string("index_mul(") + std::string(to_string(a)) +
                                   ", " + std::string(to_string(b)) + ") != " +
                                   std::string(to_string(b));
                return r;
            }
        }
    }
    r.status = LawStatus::Pass;
    return r;
}

}  // namespace

std::string_view to_string(LawStatus s) noexcept {
    switch (s) {
        case LawStatus::Pass: return "pass";
        case LawStatus::Fail: return "fail";
        case LawStatus::WitnessFound: return "witness_found";
        case LawStatus::Vacuous: return "vacuous";
    }
    return "vacuous";
}

LawReport check_universal(std::string_view law_id, int arity, const TrialConfig& config,
                          const std::function<bool(std::span<const CompleteNumber>)>& holds) {
    validate(config);
    LawReport r = base_report(law_id, config);
    for (int trial = 0; trial < config.trials; ++trial) {
        auto rng = trial_stream(config, law_id, static_cast<std::uint64_t>(trial));
        std::vector<CompleteNumber> operands;
        operands.reserve(static_cast<std::size_t>(arity));
        for (int k = 0; k < arity; ++k) {
            operands.push_back(gen_complete(rng, config.magnitude_bound));
        }
        ++r.trials_run;
        if (!holds(operands)) {
            r.status = LawStatus::Fail;
            r.counterexample_operands = std::move(operands);
            r.counterexample = operands_text(r.counterexample_operands);
            return r;
        }
    }
    r.status = r.trials_run == 0 ? LawStatus::Vacuous : LawStatus::Pass;
    return r;
}

LawReport check_law(std::string_view law_id, const TrialConfig& config) {
    validate(config);
    using Operands = std::span<const CompleteNumber>;
    if (law_id == "add_comm") {
        return check_universal(law_id, 2, config, [](Operands o) {
            return o[0] + o[1] == o[1] + o[0];
        });
    }
    if (law_id == "add_assoc") {
        return check_universal(law_id, 3, config, [](Operands o) {
            return o[0] + (o[1] + o[2]) == (o[0] + o[1]) + o[2];
        });
    }
    if (law_id == "mul_assoc") {
        return check_universal(law_id, 3, config, [](Operands o) {
            return o[0] * (o[1] * o[2]) == (o[0] * o[1]) * o[2];
        });
    }
    if (law_id == "left_distrib") {
        return check_universal(law_id, 3, config, [](Operands o) {
            return o[0] * (o[1] + o[2]) == o[0] * o[1] + o[0] * o[2];
        });
    }
    if (law_id == "right_distrib") {
        return check_universal(law_id, 3, config, [](Operands o) {
            return (o[1] + o[2]) * o[0] == o[1] * o[0] + o[2] * o[0];
        });
    }
    if (law_id == "shadow_hom") {
        return check_universal(law_id, 2, config, [](Operands o) {
            return shadow(o[0] + o[1]) == shadow(o[0]) + shadow(o[1]) &&
                   shadow(o[0] * o[1]) == shadow(o[0]) * shadow(o[1]);
        });
    }
    if (law_id == "mul_noncomm") return check_mul_noncomm(config);
    if (law_id == "div_roundtrip") return check_div_roundtrip(config);
    if (law_id == "left_identity_family") return check_left_identity_family(config);
    if (law_id == "index_right_projection") return check_index_right_projection(config);
    throw UnknownLaw("unknown law identifier: " + std::string(law_id));
}

std::vector<LawReport> run_suite(const TrialConfig& config) {
    std::vector<LawReport> reports;
    reports.reserve(kLawOrder.size());
    for (const auto law_id : kLawOrder) {
        reports.push_back(check_law(law_id, config));
    }
    return reports;
}

bool suite_passed(std::span<const LawReport> reports) {
    for (const auto& r : reports) {
        const LawStatus wanted =
            r.law_id == "mul_noncomm" ? LawStatus::WitnessFound : LawStatus::Pass;
        if (r.status != wanted) return false;
    }
    return !reports.empty();
}

std::string reports_to_json(std::span<const LawReport> reports) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json item;
        item["law_id"] = r.law_id;
        item["status"] = to_string(r.status);
        item["trials_run"] = r.trials_run;
        item["skipped"] = r.skipped;
        item["seed"] = r.seed;
        item["rng"] = kLawRngName;
        item["counterexample"] =
            r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

}  // namespace cnum
