#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fencetile::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTooLarge = 3;

// Runs one command. `args` excludes the program name. Output is
// deterministic for identical arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fencetile::cli
