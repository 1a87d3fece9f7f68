#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpecalc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Tables go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 when a reproduced value
// misses its expected value, 2 on argument or domain errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mpecalc
