#ifndef ONEPI_CLI_HPP
#define ONEPI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace onepi::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace onepi::cli

#endif  // ONEPI_CLI_HPP
