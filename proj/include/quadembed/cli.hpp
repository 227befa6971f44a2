#ifndef QUADEMBED_CLI_HPP_
#define QUADEMBED_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace quadembed::cli {

  enum ExitCode : int {
    ok               = 0,
    unsolvable       = 1,
    inconclusive     = 2,
    usage_error      = 64,
    input_error      = 65,
    internal_failure = 70,
  };

  // Runs one subcommand; args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace quadembed::cli

#endif  // QUADEMBED_CLI_HPP_
