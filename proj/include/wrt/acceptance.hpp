#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wrt {

struct CheckResult {
    std::string name;
    bool passed;
    bool warned;       // soft failure on an exploratory sub-check
    std::string detail;
};

// The acceptance criteria, one entry each, in spec order. Each runs
// self-contained and returns a line-sized verdict plus detail text.
struct Criterion {
    std::string id;          // "verlinde", "fusion", ...
    std::string description;
    std::function<CheckResult()> run;
};

const std::vector<Criterion>& acceptance_criteria();

// Look up criteria by suite name ("all" runs everything).
std::vector<const Criterion*> criteria_for_suite(const std::string& suite);

} // namespace wrt
