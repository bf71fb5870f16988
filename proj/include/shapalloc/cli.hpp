#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shapalloc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command-line front end. `args` excludes the program name.
/// Returns 0 on success, 1 when the input fails validation (or an engine
/// rejects it), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapalloc
