#pragma once

// Command-line front end. Subcommands: volume, bounds, curve-sp-gv,
// genericity, mmin, montecarlo. Exit codes: 0 success, 1 I/O failure,
// 2 invalid arguments.

#include <iosfwd>
#include <string>
#include <vector>

namespace sumrank::cli {

/// args excludes the program name. Normal output goes to `out` unless
/// --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace sumrank::cli
