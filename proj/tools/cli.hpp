#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mildisc::cli {

/// Exit codes, stable for scripting.
enum ExitCode : int { ok = 0, usage = 2, io_or_parse = 3, contract = 4 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mildisc::cli
