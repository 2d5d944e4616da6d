#ifndef HURWITZ_CLI_HH
#define HURWITZ_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kComputation = 3 };

// args[0] is the program name. Subcommands: compute, crosscheck, bench.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hurwitz::cli

#endif // HURWITZ_CLI_HH
