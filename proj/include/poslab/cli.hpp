#ifndef POSLAB_CLI_HPP
#define POSLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace poslab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRefuted = 1,
  kInputError = 2,
  kInsufficientOrder = 3,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out` or to the --out file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Significant digits for approximate diagnostics: POSLAB_PRECISION or 17.
int float_digits();

}  // namespace poslab::cli

#endif  // POSLAB_CLI_HPP
