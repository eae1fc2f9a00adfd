#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nurrt {

/// Benchmark front end. args excludes the program name.
/// Exit codes: 0 success, 2 bad input or I/O failure, 3 planner found no
/// path; CLI11 codes for usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nurrt
