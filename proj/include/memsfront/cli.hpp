#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "memsfront/states.hpp"

namespace memsfront::cli {

/// Exit codes of the command-line surface.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;        // usage or parse errors
inline constexpr int exit_violation = 2;    // verification failure
inline constexpr int exit_no_converge = 3;  // solver non-convergence

/// Parses a state file: either a 4x4 complex matrix as four rows of four
/// "re+imj" entries, or a named-family descriptor of the form
///   family=<name> r=<value>
/// Throws std::runtime_error with a line/column diagnostic on bad input.
DensityMatrix parse_state_file(const std::string& path);
DensityMatrix parse_state_text(const std::string& text);

/// Runs one subcommand; argv excludes the program name. Output goes to `out`.
int run(const std::vector<std::string>& argv, std::ostream& out);

/// Convenience overload writing to std::cout.
int run(const std::vector<std::string>& argv);

}  // namespace memsfront::cli
