#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fermat {

/// Exit codes: 0 computed (whatever the verdict), 1 usage error, 2 computation failure.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitFailure = 2 };

/// Entry point of the `fermat` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat
