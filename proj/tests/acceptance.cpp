// Acceptance run: one PASS/FAIL line per criterion. Every criterion is exact;
// the allowed failure count is pinned below and never relaxed.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include <sys/wait.h>

#include "ggp/ggp.hpp"
#include "oracles.hpp"

#ifndef GGP_CLI_PATH
#error "GGP_CLI_PATH must point at the ggp executable"
#endif

using namespace ggp;

namespace {

constexpr std::uint64_t kAllowedFailures = 0;
constexpr double kTimeBudgetSeconds = 120.0;

struct Result {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    std::function<Result()> run;
};

Result from_report(const SuiteReport& rep, std::uint64_t min_instances) {
    Result r;
    r.pass = rep.failure_count == kAllowedFailures && rep.instances >= min_instances;
    r.detail = std::to_string(rep.instances) + " instances, " + std::to_string(rep.failure_count) +
               " failures";
    if (!rep.failures.empty()) r.detail += "; first: " + rep.failures.front().instance.dump();
    return r;
}

Result matching_oracle() {
    RangeSpec r;
    r.random_instances = 500;
    return from_report(run_suite("matching-oracle", r), 500);
}

Result ggp_equivalence() {
    RangeSpec r;
    r.max_a = 3;
    r.max_b = 3;
    r.max_factors = 4;
    r.labels = {{"rho", 1, "rho"}, {"sigma", 1, "sigma"}};
    const auto all = enumerate_arthur(r);
    std::uint64_t pairs = 0, mismatches = 0, bad_witness = 0;
    std::string first;
    for (const auto& A : all)
        for (const auto& B : all) {
            ++pairs;
            const auto w = ggp_position(A, B);
            if (w.has_value() != oracle::ggp_position(A, B)) {
                if (mismatches++ == 0) first = to_json(A).dump() + " vs " + to_json(B).dump();
            } else if (w && !is_valid_witness(A, B, *w)) {
                ++bad_witness;
            }
        }
    Result res;
    res.pass = mismatches == kAllowedFailures && bad_witness == 0;
    res.detail = std::to_string(all.size()) + " parameters, " + std::to_string(pairs) + " pairs, " +
                 std::to_string(mismatches) + " disagreements, " + std::to_string(bad_witness) +
                 " invalid witnesses";
    if (!first.empty()) res.detail += "; first: " + first;
    return res;
}

Result prop_replace() {
    RangeSpec r;
    r.max_a = 6;
    r.max_b = 6;
    r.max_weight = 7;
    return from_report(run_suite("prop-replace", r), 1);
}

Result lmlem() {
    RangeSpec r;
    r.max_a = 6;
    r.max_b = 6;
    return from_report(run_suite("lmlem", r), 36 * 36);
}

RangeSpec branching_range() {
    RangeSpec r;
    r.max_a = 3;
    r.max_b = 3;
    r.max_factors = 2;
    return r;
}

Result thm_deri() { return from_report(run_suite("thm-deri", branching_range()), 1); }
Result indeed_quo() { return from_report(run_suite("indeed-quo", branching_range()), 1); }

Result identities() {
    RangeSpec r;
    r.max_a = 6;
    r.max_b = 6;
    r.max_factors = 4;
    return from_report(run_suite("involutions", r), 1);
}

Result seg_lem_round_trip() {
    RangeSpec r;
    r.max_a = 3;
    r.max_b = 3;
    r.max_factors = 3;
    return from_report(run_suite("cor-main", r), 1);
}

// --- criterion 9: regression through the command-line binary ---------------

struct CliRun {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(GGP_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string arthur_arg(std::initializer_list<std::pair<int, int>> fs) {
    ArthurParams A;
    for (auto [a, b] : fs) A.factors.push_back({"rho", a, b});
    return quote(to_json(A).dump());
}

Json witness_json(Json up, Json down, Json ua, Json ub) {
    return Json{{"matched_up", up}, {"matched_down", down}, {"unmatched_a", ua}, {"unmatched_b", ub}};
}

Json report_json(bool pass, std::array<bool, 4> ok) {
    Json items = Json::array();
    for (int i = 0; i < 4; ++i)
        items.push_back(Json{{"item", i + 1}, {"ok", ok[i]}, {"failing", Json::array()}});
    return Json{{"kind", "necessary conditions"}, {"pass", pass}, {"items", items}};
}

/// Compares the parsed document and exit code; "failing" index lists on a
/// failed unitary item are not stated by the expectation and are ignored.
bool same(const CliRun& got, const Json& expected, int expected_code, std::string& why) {
    Json doc;
    try {
        doc = Json::parse(got.out);
    } catch (const std::exception& e) {
        why = std::string("unparsable output: ") + e.what();
        return false;
    }
    if (doc.contains("items"))
        for (auto& item : doc["items"]) item["failing"] = Json::array();
    if (doc != expected || got.code != expected_code) {
        why = "expected " + expected.dump() + " exit " + std::to_string(expected_code) + ", got " +
              doc.dump() + " exit " + std::to_string(got.code);
        return false;
    }
    return true;
}

Result verdict_regression() {
    const Json E = Json::array();
    struct Case {
        std::string name;
        std::string args;
        Json expected;
        int code;
    };
    const std::string u1 = quote(R"({"arthur0":[{"label":"rho","a":1,"b":1}],"comps":[{"arthur":[{"label":"rho","a":1,"b":1}],"alpha":"1/4"}]})");
    const std::vector<Case> cases{
        {"verdict 1", "branch verdict " + arthur_arg({{1, 2}}) + " " + arthur_arg({{1, 1}}),
         Json{{"tag", "HomNonzero"},
              {"reason", reasons::kGeneric},
              {"witness", witness_json(E, Json::array({Json::array({1, 1})}), E, E)}},
         0},
        {"verdict 2", "branch verdict " + arthur_arg({{2, 2}}) + " " + arthur_arg({{3, 1}}),
         Json{{"tag", "HomZero"}, {"reason", reasons::kNotGgp}, {"witness", nullptr}}, 1},
        {"verdict 3", "branch verdict " + arthur_arg({{2, 2}}) + " " + arthur_arg({{2, 1}, {1, 1}}),
         Json{{"tag", "HomNonzero"},
              {"reason", reasons::kGeneric},
              {"witness", witness_json(E, Json::array({Json::array({1, 1})}), E, Json::array({2}))}},
         0},
        {"unitary 1", "unitary check " + u1 + " " + quote(R"({"arthur0":[{"label":"rho","a":1,"b":2}],"comps":[]})"),
         report_json(true, {true, true, true, true}), 0},
        // As stated: U2.arthur0 = {(rho,2,1)} is expected to fail item (1).
        {"unitary 2", "unitary check " + u1 + " " + quote(R"({"arthur0":[{"label":"rho","a":2,"b":1}],"comps":[]})"),
         report_json(false, {false, true, true, true}), 1},
    };
    Result res;
    res.pass = true;
    int ok = 0;
    for (const auto& c : cases) {
        std::string why;
        if (same(run_cli(c.args), c.expected, c.code, why)) {
            ++ok;
        } else {
            res.pass = false;
            res.detail += "; " + c.name + ": " + why;
        }
    }
    res.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " cases reproduced" + res.detail;
    return res;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "matching oracle equivalence (500 random graphs, <= 6+6)", matching_oracle},
        {2, "GGP decider vs partition search (<= 4 factors, 2 labels, a,b <= 3)", ggp_equivalence},
        {3, "quasi-Speh socle is the sum (a+b <= 7, q below p)", prop_replace},
        {4, "half-shifted Speh products irreducible (a,b <= 6)", lmlem},
        {5, "derivative match implies GGP position", thm_deri},
        {6, "GGP position implies a derivative match", indeed_quo},
        {7, "identities, involutions, sym_decompose, exponent closed form", identities},
        {8, "seg-lem round trip (<= 3 factors, a,b <= 3)", seg_lem_round_trip},
        {9, "verdict and unitary regression through the CLI", verdict_regression},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        if (dt.count() > kTimeBudgetSeconds) {
            r.pass = false;
            r.detail += "; over the time budget";
        }
        if (!r.pass) ++failed;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", dt.count());
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ["
                  << r.detail << "] (" << secs << ")" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criterion(s) fail")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
