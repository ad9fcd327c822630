#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsnn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitValidation = 2;

/// Entry point of the `qsnn` tool; `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsnn
