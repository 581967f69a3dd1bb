#ifndef XYK_CLI_HPP
#define XYK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace xyk::cli {

/// Entry point behind the binary; exposed so tests can drive the full
/// command surface in-process. Exit codes: 0 success, 1 mathematical
/// refutation or unexpected verdict, 2 usage error, 3 budget exhaustion.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xyk::cli

#endif
