#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jamnet::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AcceptanceOptions {
    unsigned jobs = 0;                 // 0 = hardware concurrency
    std::ostream* progress = nullptr;  // one line per criterion as it finishes
};

/// Runs the ten acceptance criteria and returns one result each, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

void print_results(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace jamnet::verify
