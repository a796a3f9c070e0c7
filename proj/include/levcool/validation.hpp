#ifndef LEVCOOL_VALIDATION_HPP
#define LEVCOOL_VALIDATION_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace levcool {

struct CheckResult {
    std::string id;  // "1".."10" for acceptance criteria, "inv-*" for invariants
    std::string name;
    bool passed = false;
    std::string detail;
};

// The ten acceptance criteria, each evaluated against an oracle that does not share
// the code path under test.
std::vector<CheckResult> acceptance_checks();
CheckResult acceptance_check(int number);

// Cheaper structural invariants (vacuum state, trace identity, cross-route spectra...).
std::vector<CheckResult> invariant_checks();

// "PASS|FAIL <id> <name>: <detail>" per line; returns the number of failures.
int print_checks(std::ostream& out, const std::vector<CheckResult>& checks);

}  // namespace levcool

#endif  // LEVCOOL_VALIDATION_HPP
