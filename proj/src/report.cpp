#include "mcperm/report.hpp"

#include <sstream>

namespace mcperm {

nlohmann::ordered_json SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchemaVersion;
    j["suite"] = suite;
    j["label"] = label;
    j["cases_run"] = cases_run;
    j["cases_passed"] = cases_passed;
    j["seed"] = seed;
    j["trials"] = trials;
    auto notes_json = nlohmann::ordered_json::object();
    for (const auto& [k, v] : notes) notes_json[k] = v;
    j["notes"] = std::move(notes_json);
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json fj;
        fj["case"] = f.case_id;
        fj["inputs"] = f.inputs;
        fj["expected"] = f.expected;
        fj["got"] = f.got;
        fj["conjecture_probe"] = f.conjecture_probe;
        fails.push_back(std::move(fj));
    }
    j["failures"] = std::move(fails);
    return j;
}

std::string SuiteReport::summary_line() const {
    std::ostringstream os;
    os << (passed() ? "PASS " : "FAIL ") << suite << ": " << cases_passed << "/" << cases_run
       << " cases";
    if (!failures.empty()) os << ", " << failures.size() << " failure(s)";
    if (wall_ms > 0) os << "  [" << static_cast<long>(wall_ms) << " ms]";
    return os.str();
}

SuiteReport merge_reports(const std::string& suite, const std::string& label,
                          std::vector<SuiteReport> parts) {
    SuiteReport out;
    out.suite = suite;
    out.label = label;
    for (auto& p : parts) {
        out.cases_run += p.cases_run;
        out.cases_passed += p.cases_passed;
        for (auto& f : p.failures) out.failures.push_back(std::move(f));
    }
    return out;
}

}  // namespace mcperm
