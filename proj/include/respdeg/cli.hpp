#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace respdeg
{

namespace exit_code
{
inline constexpr int ok = 0;
/// Undefined or empty analysis outcome, only with --strict.
inline constexpr int empty_outcome = 1;
inline constexpr int usage = 2;
inline constexpr int model = 3;
} // namespace exit_code

/// Runs the `respdeg` command line. `args[0]` is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace respdeg
