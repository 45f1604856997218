#pragma once

#include <iosfwd>

namespace osaas::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitNoSignal = 2,
    kExitConfigError = 3,
    kExitInvalidScenario = 4,
};

// Entry point of the osaas-probe tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osaas::cli
