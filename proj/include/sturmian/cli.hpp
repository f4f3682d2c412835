#pragma once

// Command-line front end: one subcommand per reproduced table or figure
// dataset, plus the errata audit and ad-hoc basis/solve commands. The
// main() in tools/ is a thin wrapper so the tests can drive the same
// entry point in-process.

#include <ostream>
#include <string>
#include <vector>

namespace sturmian::cli {

// argv-style arguments without the program name; returns the process exit
// code (0 on success, including errata findings; nonzero on failure)
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sturmian::cli
