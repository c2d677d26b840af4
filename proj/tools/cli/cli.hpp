#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthoplex::cli {

enum ExitCode : int { ok = 0, input_error = 1, verification_failed = 2 };

/// Runs one command line (without the program name). Machine-readable
/// errors go to `err` as a single {"error": ...} line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orthoplex::cli
