#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace confmap {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs every acceptance criterion (disk, Cassini oval and frame experiments,
/// structural properties, solver contracts) at its pinned tolerance.
std::vector<CriterionResult> run_acceptance();

/// Prints one "[PASS]" / "[FAIL]" line per criterion; returns true when all pass.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace confmap
