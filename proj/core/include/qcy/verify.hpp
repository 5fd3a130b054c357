#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcy/report.hpp"

namespace qcy {

struct VerifyOptions {
    std::string level = "quick";  // quick | full
    double tolerance = 1e-9;
    unsigned seed = 12345;
    int jobs = 1;

    bool full() const { return level == "full"; }
};

struct Suite {
    std::string name;
    std::string summary;
    std::function<void(const VerifyOptions&, Report&)> run;
};

const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

// Runs the named suites (all when names is empty).  Results appear in suite
// order regardless of the number of worker threads.
Report run_verification(const VerifyOptions& opt, const std::vector<std::string>& names = {});

}  // namespace qcy
