#pragma once

// Command-line front end: eval, zeta, eta, lerch, mellin, series, check, table.
// Exit codes: 0 ok, 1 identity check failed, 2 flag or parse error,
// 3 evaluation error, 4 Mellin precondition violated.

#include "polyexp/types.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace polyexp::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_evaluation = 3,
    exit_precondition = 4,
};

/// "a", "bi", "a+bi", "a-bi", "i", "-i"; throws ParseError with the byte offset.
Complex parse_complex(std::string_view text);

/// "start:stop:count" with count >= 1, endpoints included.
std::vector<double> parse_range(std::string_view text);

/// args excludes the program name. Reads POLYEXP_MAX_TERMS from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyexp::cli
