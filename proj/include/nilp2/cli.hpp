#ifndef NILP2_CLI_HPP
#define NILP2_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nilp2::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kVerificationFailed = 3,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilp2::cli

#endif  // NILP2_CLI_HPP
