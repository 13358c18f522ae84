#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace okp::cli {

enum ExitCode : int {
    ok = 0,
    invalid_arguments = 2,
    malformed_json = 3,
    invalid_input = 4,
    budget_exceeded = 5,
    not_applicable = 6,
    io_error = 7,
};

/// Environment variable holding the default search node budget.
inline constexpr const char* kNodeBudgetEnv = "OKP_NODE_BUDGET";
inline constexpr unsigned long long kDefaultNodeBudget = 200'000'000ULL;

/// Runs one command line (args[0] is the program name). Results go to `out`;
/// failures print {"error": {"code": ..., "message": ...}} to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace okp::cli
