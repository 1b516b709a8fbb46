#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shiftdec::cli {

enum ExitCode : int { Ok = 0, UsageError = 1, Violation = 2 };

/// Runs one command line (program name excluded). Records go to `out` unless
/// --out is given; diagnostics and violation witnesses go to `err`.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace shiftdec::cli
