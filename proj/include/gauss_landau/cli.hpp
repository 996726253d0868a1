#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gauss_landau::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gauss_landau::cli
