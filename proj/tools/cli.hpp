#ifndef HM_TOOLS_CLI_HPP
#define HM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hm::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kTooLarge = 3,
};

/// Runs one command line (args excludes the program name). Primary output
/// goes to `out`, diagnostics as one-line JSON to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hm::cli

#endif
