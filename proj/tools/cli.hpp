#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bridgeland::cli {

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kInputError = 2 };

/// Runs one command line (without the program name). "-" as a file argument reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Built-in collections: E-p1p1, E'-p1p1, F'-p1p1, E-blp2, E'-blp2, Ehat-blp2, E''-blp2, F'-blp2,
/// F''-blp2.
std::vector<std::string> fixture_names();

}  // namespace bridgeland::cli
