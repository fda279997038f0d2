#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brt {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitData = 3,
    kExitNumeric = 4,
};

/// Entry point behind the `brt` tool. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv);

}  // namespace brt
