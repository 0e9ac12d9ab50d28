#ifndef HULLFORGE_ACCEPTANCE_HPP
#define HULLFORGE_ACCEPTANCE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hullforge {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;  // failure reason or a one-line summary
};

/// Runs the ten acceptance criteria. `data_dir` must contain the shipped
/// table input (sok2_tables.txt) and its frozen expected output
/// (sok2_tables_expected.txt).
std::vector<CriterionResult> run_acceptance(const std::string& data_dir);

/// Prints one "PASS criterion N: ..." / "FAIL criterion N: ..." line per
/// criterion to `out`; returns true iff all passed.
bool run_acceptance_and_report(const std::string& data_dir, std::ostream& out);

}  // namespace hullforge

#endif
