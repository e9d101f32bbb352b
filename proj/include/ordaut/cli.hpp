#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordaut::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNotIsomorphic = 1;
inline constexpr int kParseError = 2;
inline constexpr int kScattered = 3;
inline constexpr int kNeither = 4;
inline constexpr int kPrecondition = 5;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordaut::cli
