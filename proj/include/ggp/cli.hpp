#pragma once

// Command-line front end. Every subcommand prints exactly one JSON document on
// stdout; diagnostics go to stderr.
//
// Exit codes:
//   0  success, or a positive decision
//   1  negative decision: ggp check (not in GGP position), branch verdict
//      (HomZero), lm socle (not the sum), derive speh ("zero"),
//      unitary check (a necessary condition fails), cyclic (false)
//   2  usage error, malformed JSON, or a violated precondition
//   3  verify: the suite reported failures

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ggp/codec.hpp"
#include "ggp/harness.hpp"

namespace ggp::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kSuiteFailed = 3 };

/// Reads a JSON argument: "-" is stdin, text starting with '{' or '[' is
/// inline JSON, anything else is a file path.
inline Json read_json_arg(const std::string& arg, std::istream& in) {
    std::string text;
    std::string origin;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        origin = "<stdin>";
    } else if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        text = arg;
        origin = "<inline>";
    } else {
        std::ifstream f(arg);
        if (!f) throw DecodeError("", "cannot read " + arg);
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
        origin = arg;
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DecodeError("", origin + ": " + e.what());
    }
}

inline LabelSet load_labels(const std::optional<std::string>& arg, std::istream& in) {
    if (!arg) return LabelSet::single();
    return labels_from_json(read_json_arg(*arg, in));
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"GGP branching and Speh combinatorics"};
    app.require_subcommand(1);
    std::optional<std::string> labels_arg;
    app.add_option("--labels", labels_arg, "labels JSON: [{\"id\",\"degree\",\"dual\"}...]");

    std::string arg1, arg2;
    auto two_inputs = [&](CLI::App* sub) {
        sub->add_option("first", arg1, "file, '-' for stdin, or inline JSON")->required();
        sub->add_option("second", arg2, "file, '-' for stdin, or inline JSON")->required();
    };

    auto* ggp = app.add_subcommand("ggp", "GGP position");
    ggp->require_subcommand(1);
    auto* ggp_check = ggp->add_subcommand("check", "decide GGP position of <A> <B>");
    two_inputs(ggp_check);

    auto* branch = app.add_subcommand("branch", "branching verdicts");
    branch->require_subcommand(1);
    auto* branch_verdict_cmd = branch->add_subcommand("verdict", "verdict for <A> <B>");
    two_inputs(branch_verdict_cmd);

    auto* lm = app.add_subcommand("lm", "ladder products");
    lm->require_subcommand(1);
    auto* lm_socle = lm->add_subcommand("socle", "is Z(m1 + m2) the socle of Z(m1) x Z(m2)");
    two_inputs(lm_socle);

    auto* derive = app.add_subcommand("derive", "derivatives");
    derive->require_subcommand(1);
    auto* derive_speh = derive->add_subcommand("speh", "i-th derivative of a Speh block");
    int da = 0, db = 0, di = 0;
    std::optional<int> ddeg;
    std::optional<std::string> dlabel;
    derive_speh->add_option("--a", da)->required()->check(CLI::PositiveNumber);
    derive_speh->add_option("--b", db)->required()->check(CLI::PositiveNumber);
    derive_speh->add_option("--i", di)->required()->check(CLI::NonNegativeNumber);
    derive_speh->add_option("--degree", ddeg)->check(CLI::PositiveNumber);
    derive_speh->add_option("--label", dlabel);

    auto* unitary = app.add_subcommand("unitary", "unitarizable branching");
    unitary->require_subcommand(1);
    auto* unitary_check = unitary->add_subcommand("check", "necessary conditions for <U1> <U2>");
    two_inputs(unitary_check);

    auto* cyclic = app.add_subcommand("cyclic", "is a tuple of multisegments cyclic");
    cyclic->add_option("tuple", arg1, "array of multisegments")->required();

    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    RangeSpec range;
    std::optional<std::string> out_path;
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-a", range.max_a)->check(CLI::PositiveNumber);
    verify->add_option("--max-b", range.max_b)->check(CLI::PositiveNumber);
    verify->add_option("--max-factors", range.max_factors)->check(CLI::PositiveNumber);
    verify->add_option("--max-weight", range.max_weight, "bound on a + b, 0 for none");
    verify->add_option("--instances", range.random_instances)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", range.seed);
    verify->add_option("--out", out_path, "append every instance to this JSONL file");

    // CLI11 takes the arguments without argv[0], in reverse order.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << Json{{"help", app.help()}}.dump(2) << '\n';
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << Json{{"help", app.help("", CLI::AppFormatMode::All)}}.dump(2) << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        out << Json{{"error", e.what()}}.dump() << '\n';
        return kUsage;
    }

    auto emit = [&](const Json& j, int code) {
        out << j.dump(2) << '\n';
        return code;
    };

    try {
        const LabelSet labels = load_labels(labels_arg, in);

        if (*ggp_check) {
            const auto A = arthur_from_json(read_json_arg(arg1, in), "A");
            const auto B = arthur_from_json(read_json_arg(arg2, in), "B");
            const auto w = ggp_position(A, B);
            if (!w)
                return emit(Json{{"in_ggp_position", false}, {"message", "not in GGP position"}},
                            kNegative);
            return emit(Json{{"in_ggp_position", true}, {"witness", to_json(*w)}}, kOk);
        }
        if (*branch_verdict_cmd) {
            const auto A = arthur_from_json(read_json_arg(arg1, in), "A");
            const auto B = arthur_from_json(read_json_arg(arg2, in), "B");
            const auto v = branching_verdict(A, B, labels);
            return emit(to_json(v), v.tag == VerdictTag::HomZero ? kNegative : kOk);
        }
        if (*lm_socle) {
            const auto m1 = multisegment_from_json(read_json_arg(arg1, in), "m1");
            const auto m2 = multisegment_from_json(read_json_arg(arg2, in), "m2");
            const auto r = lm_socle_check(m1, m2);
            return emit(Json{{"socle_is_sum", r.socle_is_sum}, {"graph", to_json(r.graph)}},
                        r.socle_is_sum ? kOk : kNegative);
        }
        if (*derive_speh) {
            LabelSet ls = labels;
            if (ddeg) {
                if (labels_arg) throw Error("--degree conflicts with --labels");
                ls = LabelSet::single(dlabel.value_or("rho"), *ddeg);
            }
            const std::string label = dlabel.value_or(ls.all().front().id);
            const auto d = speh_derivative(SpehParams{label, da, db}, di, ls);
            if (!d) return emit(Json("zero"), kNegative);
            return emit(to_json(*d), kOk);
        }
        if (*unitary_check) {
            const auto u1 = unitary_from_json(read_json_arg(arg1, in), "U1");
            const auto u2 = unitary_from_json(read_json_arg(arg2, in), "U2");
            const auto r = unitary_branching_necessary(u1, u2, labels);
            return emit(to_json(r), r.pass() ? kOk : kNegative);
        }
        if (*cyclic) {
            const Json j = read_json_arg(arg1, in);
            const Json& arr = codec::array(j, "");
            std::vector<Multisegment> ms;
            for (std::size_t i = 0; i < arr.size(); ++i)
                ms.push_back(multisegment_from_json(arr[i], codec::at("", i)));
            const bool c = cyclic_tuple(ms);
            return emit(Json{{"cyclic", c}}, c ? kOk : kNegative);
        }
        if (*verify) {
            if (labels_arg) range.labels = labels.all();
            const auto report = run_suite(suite, range, out_path);
            if (!report.pass())
                err << suite << ": " << report.failure_count << " failing instance(s)\n";
            return emit(to_json(report), report.pass() ? kOk : kSuiteFailed);
        }
    } catch (const DecodeError& e) {
        err << "malformed input: " << e.what() << '\n';
        return emit(Json{{"error", "malformed input"}, {"path", e.path()}, {"detail", e.what()}},
                    kUsage);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return emit(Json{{"error", e.what()}}, kUsage);
    }
    err << "no subcommand selected\n";
    return emit(Json{{"error", "no subcommand selected"}}, kUsage);
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace ggp::cli
