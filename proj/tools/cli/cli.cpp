#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cnum/errors.hpp"
#include "cnum/eval.hpp"
#include "cnum/laws.hpp"

namespace cnum::cli {

namespace {

Mode parse_mode(const std::string& name) {
    return name == "lenient" ? Mode::Lenient : Mode::Strict;
}

const char* mode_name(Mode mode) {
    return mode == Mode::Lenient ? "lenient" : "strict";
}

int error_exit_code(const Error& e) {
    return (e.kind() == "lex_error" || e.kind() == "parse_error") ? 2 : 3;
}

void print_error(std::ostream& err, const Error& e) {
    err << "error: " << e.kind() << ": " << e.what();
    if (e.position()) err << " at byte " << *e.position();
    err << "\n";
}

nlohmann::json eval_json(const std::string& input, const EvalValue& v) {
    nlohmann::json doc;
    doc["input"] = input;
    doc["status"] = v.is_void() ? "void" : "ok";
    doc["value"] = to_string(v);
    doc["error"] = nullptr;
    return doc;
}

nlohmann::json eval_error_json(const std::string& input, const Error& e) {
    nlohmann::json doc;
    doc["input"] = input;
    doc["status"] = "error";
    doc["value"] = nullptr;
    nlohmann::json detail;
    detail["kind"] = e.kind();
    detail["position"] = e.position() ? nlohmann::json(*e.position()) : nlohmann::json(nullptr);
    doc["error"] = detail;
    return doc;
}

int do_eval(const std::string& text, Mode mode, bool json, std::ostream& out,
            std::ostream& err) {
    try {
        const EvalValue v = eval_text(text, mode);
        if (json) {
            out << eval_json(text, v).dump() << "\n";
        } else {
            out << to_string(v) << "\n";
        }
        return 0;
    } catch (const Error& e) {
        if (json) {
            out << eval_error_json(text, e).dump() << "\n";
        } else {
            print_error(err, e);
        }
        return error_exit_code(e);
    }
}

int do_repl(Mode mode, std::istream& in, std::ostream& out) {
    out << "type an expression; :mode toggles strict/lenient, :quit exits\n";
    std::string line;
    while (out << "> " << std::flush, std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line == ":quit") break;
        if (line == ":mode") {
            mode = mode == Mode::Strict ? Mode::Lenient : Mode::Strict;
            out << "mode: " << mode_name(mode) << "\n";
            continue;
        }
        try {
            out << to_string(eval_text(line, mode)) << "\n";
        } catch (const Error& e) {
            print_error(out, e);
        }
    }
    return 0;
}

int do_batch(const std::string& path, Mode mode, std::ostream& out, std::ostream& err) {
    std::ifstream file(path);
    if (!file) {
        err << "error: cannot open " << path << "\n";
        return 1;
    }
    bool lex_or_parse_failed = false;
    bool eval_failed = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            out << to_string(eval_text(line, mode)) << "\n";
        } catch (const Error& e) {
            err << "line " << lineno << ": " << e.kind() << ": " << e.what();
            if (e.position()) err << " at byte " << *e.position();
            err << "\n";
            if (e.kind() == "lex_error" || e.kind() == "parse_error") {
                lex_or_parse_failed = true;
            } else {
                eval_failed = true;
            }
        }
    }
    if (lex_or_parse_failed) return 2;
    if (eval_failed) return 3;
    return 0;
}

int do_laws(const TrialConfig& config, bool json, const std::optional<std::string>& out_file,
            std::ostream& out, std::ostream& err) {
    const std::vector<LawReport> reports = run_suite(config);
    const std::string doc = reports_to_json(reports);
    if (out_file) {
        std::ofstream file(*out_file, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << *out_file << "\n";
            return 1;
        }
        file << doc;
    }
    if (json) {
        out << doc;
    } else {
        out << "law suite: seed=" << config.seed << " trials=" << config.trials
            << " bound=" << config.magnitude_bound << " mode=" << mode_name(config.mode)
            << " rng=" << kLawRngName << "\n";
        for (const auto& r : reports) {
            out << "  " << r.law_id;
            for (std::size_t pad = r.law_id.size(); pad < 24; ++pad) out << ' ';
            out << to_string(r.status) << "  trials=" << r.trials_run;
            if (r.skipped > 0) out << " skipped=" << r.skipped;
            out << "\n";
            if (r.counterexample) {
                out << "      " << *r.counterexample << "\n";
            }
        }
        out << "suite: " << (suite_passed(reports) ? "pass" : "fail") << "\n";
    }
    return suite_passed(reports) ? 0 : 1;
}

int do_table(std::ostream& out) {
    constexpr Index indices[] = {Index::Vastavic, Index::Calpanic};
    const auto mul_note = [](Index a, Index b) {
        if (a == Index::Vastavic) return b == Index::Vastavic ? "property 1" : "eqn 2";
        return b == Index::Vastavic ? "eqn 3" : "property 5";
    };

    out << "index multiplication\n";
    for (const Index a : indices) {
        for (const Index b : indices) {
            out << "  " << to_string(a) << " * " << to_string(b) << " = "
                << to_string(index_mul(a, b)) << "    " << mul_note(a, b) << "\n";
        }
    }
    out << "\nindex division\n";
    for (const Index a : indices) {
        out << "  " << to_string(a) << " / " << to_string(a) << " = "
            << to_string(index_div(a, a)) << "    "
            << (a == Index::Vastavic ? "property 2" : "property 6") << "\n";
    }
    out << "  up / down, down / up    undefined for bare indices\n";
    out << "\nindex absolute value\n";
    for (const Index a : indices) {
        out << "  |" << to_string(a) << "| = " << to_string(index_abs(a)) << "    "
            << (a == Index::Vastavic ? "property 3" : "property 7") << "\n";
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for spin-indexed complex numbers"};
    app.require_subcommand(1);

    std::string mode_string = "strict";
    const auto add_mode_option = [&mode_string](CLI::App* cmd) {
        cmd->add_option("--mode", mode_string, "strict or lenient")
            ->check(CLI::IsMember({"strict", "lenient"}));
    };

    std::string expr_text;
    bool eval_as_json = false;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
    eval_cmd->add_option("expr", expr_text, "expression text")->required();
    add_mode_option(eval_cmd);
    eval_cmd->add_flag("--json", eval_as_json, "emit a JSON result object");

    CLI::App* repl_cmd = app.add_subcommand("repl", "interactive read-eval-print loop");
    add_mode_option(repl_cmd);

    std::string batch_path;
    CLI::App* batch_cmd = app.add_subcommand("batch", "evaluate a file, one expression per line");
    batch_cmd->add_option("file", batch_path, "input file; '#' lines are comments")->required();
    add_mode_option(batch_cmd);

    TrialConfig config;
    bool laws_as_json = false;
    std::string laws_out_path;
    CLI::App* laws_cmd = app.add_subcommand("laws", "run the algebraic law suite");
    laws_cmd->add_option("--trials", config.trials, "trials per law")
        ->check(CLI::NonNegativeNumber);
    laws_cmd->add_option("--seed", config.seed, "PRNG seed");
    laws_cmd->add_option("--bound", config.magnitude_bound, "magnitude bound for operands")
        ->check(CLI::PositiveNumber);
    add_mode_option(laws_cmd);
    laws_cmd->add_flag("--json", laws_as_json, "print the JSON report to stdout");
    laws_cmd->add_option("--out", laws_out_path, "also write the JSON report to FILE");

    CLI::App* table_cmd = app.add_subcommand("table", "print the index operation tables");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const Mode mode = parse_mode(mode_string);
    if (*eval_cmd) return do_eval(expr_text, mode, eval_as_json, out, err);
    if (*repl_cmd) return do_repl(mode, in, out);
    if (*batch_cmd) return do_batch(batch_path, mode, out, err);
    if (*laws_cmd) {
        config.mode = mode;
        const std::optional<std::string> out_file =
            laws_out_path.empty() ? std::nullopt : std::optional<std::string>(laws_out_path);
        return do_laws(config, laws_as_json, out_file, out, err);
    }
    if (*table_cmd) return do_table(out);
    return 0;
}

}  // namespace cnum::cli
