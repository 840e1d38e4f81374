#pragma once

#include <string>
#include <vector>

namespace bunq {

enum class Command { Series, Factors, Homotopy, Cohomology, Hodge, Selftest };
enum class OutputMode { Text, Machine };

/// A fully parsed CLI request. The compute commands require group and space
/// specs; selftest requires neither.
struct Request {
    Command command = Command::Selftest;
    std::string group;
    std::string space;
    int max_degree = 20;
    bool assume_even_cells = false;
    bool conjectural = false;
    OutputMode output = OutputMode::Text;
};

/// Exit codes: 0 success (and selftest all-pass), 1 selftest failure,
/// 2 parse/usage errors, 3 even-cell hypothesis violations, 4 internal
/// invariant breaches. Output is rendered in full before anything is
/// emitted, so errors never leave partial output behind.
struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

RunResult run(const Request& request);

/// Parses argv[1..] and dispatches. Flag errors are reported on exit code 2.
RunResult run_cli(const std::vector<std::string>& args);

} // namespace bunq
