#ifndef MNC_CLI_HPP
#define MNC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mnc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kModuleError = 1;
inline constexpr int kParseError = 2;
inline constexpr int kBudgetError = 3;
inline constexpr int kInternalError = 4;

/// Runs the `mnc` command line; args excludes the program name. Data goes to
/// out, diagnostics and progress to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mnc::cli

#endif
