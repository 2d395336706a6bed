#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfspec {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AcceptanceOptions {
    unsigned threads = 0;          // 0 = hardware concurrency
    std::vector<int> criteria;     // empty = all ten
};

// Runs the verification suite, printing one PASS/FAIL line per criterion.
// Returns every result; overall success = all passed.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& log);

} // namespace lfspec
