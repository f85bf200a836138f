#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace turan {

struct ClaimResult {
    std::string id;
    std::string anchor;  // the mathematical statement being checked
    bool pass = false;
    nlohmann::json measured;
    nlohmann::json counterexample;  // null unless the claim failed
    double runtime_ms = 0.0;
};

struct VerifySuiteReport {
    int schema = 1;
    std::string suite;
    std::vector<ClaimResult> claims;
    bool pass = false;
    double runtime_ms = 0.0;
};

std::vector<std::string> suite_ids();

// Runs the suite's fixed claim list. Every feasibility bound a suite needs is
// pinned inside its definition, so a report means the same thing on every
// configuration. With parallel, independent claims run concurrently and the
// report order stays fixed.
VerifySuiteReport run_suite(const std::string& id, bool parallel = false);

nlohmann::json report_to_json(const VerifySuiteReport& report);
std::string report_to_text(const VerifySuiteReport& report);

}  // namespace turan
