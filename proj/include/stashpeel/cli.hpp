#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stashpeel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;  // cap exceeded, or a gadget check failed
inline constexpr int kExitInputError = 2;

/// Runs one `stashpeel` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stashpeel
