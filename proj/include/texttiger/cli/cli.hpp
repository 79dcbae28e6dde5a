#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "texttiger/cli/run_config.hpp"

namespace texttiger::cli {

/// Parses `args` (without the program name), resolves the run configuration
/// and runs one subcommand. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_env);

}  // namespace texttiger::cli
