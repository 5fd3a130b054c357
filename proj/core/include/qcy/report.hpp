#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qcy {

enum class CheckStatus { Pass, Fail, Skip };

const char* status_name(CheckStatus s);

// One verified identity or comparison at one parameter point.
struct CheckResult {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string computed;
    double elapsed_ms = 0.0;
};

// Timing is always collected but only rendered on request, so that reports
// for the same configuration stay byte-identical across runs.
struct Report {
    std::string version = "0.1.0";
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckResult> checks;
    bool with_timing = false;
    double wall_ms = 0.0;

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    int n_pass() const;
    int n_fail() const;
    int n_skip() const;
    bool ok() const { return n_fail() == 0; }
};

std::string render_json(const Report& rep);
std::string render_table(const Report& rep);
std::string render_csv(const Report& rep);

}  // namespace qcy
