#ifndef CANON_CLI_COMMANDS_HPP
#define CANON_CLI_COMMANDS_HPP

#include "canon/cli/json_io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace canon::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // assertion or suite failure
    kExitUsage = 2,
    kExitIo = 3,
};

/// A polynomial named on the command line, e.g. "projective:3",
/// "grassmannian:2,4", "surface:9,3", "threefold:64,24", "curve:2",
/// "coeffs:1/2,1,1/2".
struct ConstructorSpec {
    Polynomial polynomial;
    int dim = 1;
    json echo;
    std::optional<ChernData> chern;
};

ConstructorSpec parse_constructor(const std::string& spec);

/// Runs the CLI on args (program name excluded). Documents go to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace canon::cli

#endif
