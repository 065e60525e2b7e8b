#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mcperm {

inline constexpr int kReportSchemaVersion = 1;

// Outcome of one verification suite. Serialization is deterministic:
// ordered keys, no timing fields, so reruns with the same seed compare
// byte-for-byte regardless of thread count.
struct SuiteReport {
    struct Failure {
        std::string case_id;
        std::string inputs;
        std::string expected;
        std::string got;
        bool conjecture_probe = false;
    };

    std::string suite;
    std::string label;  // "theorem-backed", "exact-identity", or "conjecture-probe"
    long long cases_run = 0;
    long long cases_passed = 0;
    std::vector<Failure> failures;
    uint64_t seed = 0;
    int trials = 0;
    std::vector<std::pair<std::string, std::string>> notes;  // universe sizes etc.
    double wall_ms = 0.0;  // console-only; never serialized

    bool passed() const { return failures.empty() && cases_passed == cases_run; }
    bool has_probe_refutation() const {
        for (const auto& f : failures)
            if (f.conjecture_probe) return true;
        return false;
    }
    bool has_hard_failure() const {
        for (const auto& f : failures)
            if (!f.conjecture_probe) return true;
        return false;
    }

    void note(std::string key, std::string value) {
        notes.emplace_back(std::move(key), std::move(value));
    }
    void record(bool ok, const std::string& case_id, const std::string& inputs,
                const std::string& expected, const std::string& got, bool probe = false) {
        ++cases_run;
        if (ok) ++cases_passed;
        else failures.push_back({case_id, inputs, expected, got, probe});
    }

    nlohmann::ordered_json to_json() const;
    std::string serialize() const { return to_json().dump(2) + "\n"; }
    std::string summary_line() const;
};

// Merges per-case sub-reports produced by a parallel run, in slot order,
// so aggregation is independent of scheduling.
SuiteReport merge_reports(const std::string& suite, const std::string& label,
                          std::vector<SuiteReport> parts);

}  // namespace mcperm
