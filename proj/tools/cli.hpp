#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsnfire::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;

/// Runs one `wsnfire` invocation. `args` excludes the program name.
/// Results go to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsnfire::cli
