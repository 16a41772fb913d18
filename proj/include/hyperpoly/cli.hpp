#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperpoly {

// Command-line entry point (also driven directly by the test suites).
// Exit codes: 0 success, 1 parse/analysis/simulation error, 2
// containment violation found by `check`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperpoly
