#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mtl/zeros.hpp"

namespace mtl {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Per-module invariant/oracle suites behind `cli verify`. Each check is
// self-contained and prints one machine-readable line via report().
std::vector<CheckResult> verify_arith();
std::vector<CheckResult> verify_laurent();
std::vector<CheckResult> verify_mainterm();
std::vector<CheckResult> verify_special();
std::vector<CheckResult> verify_zeros(const ZeroTable& table);

// Laurent coefficient tables (a_m, b_n) as CSV, for inspection.
void print_alpha_tables(std::ostream& out);

// "PASS <name> <detail>" / "FAIL <name> <detail>"; returns number of failures.
int report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace mtl
