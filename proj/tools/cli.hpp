#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fillcurve::cli {

/// Exit codes.
enum Exit : int { kOk = 0, kParse = 1, kPrecondition = 2, kGuard = 3, kInternal = 4 };

/// True when FILLCURVE_GUARD_OVERRIDE is set, non-empty and not "0".
bool env_override();

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fillcurve::cli
