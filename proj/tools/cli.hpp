#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // verified negative, e.g. a C6 was found
inline constexpr int kExitInputError = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turan::cli
