#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polygeo::cli {

/// Parses argv (without the program name) and runs one command. Results go
/// to `out` (or the --out file), failures to `err` as
/// {"error": <code>, "detail": <text>}. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// Caps OpenMP workers; n <= 0 leaves the runtime default.
void set_threads(int n);

}  // namespace polygeo::cli
