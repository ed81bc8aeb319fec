#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitError = 2;

inline constexpr std::size_t kDefaultGuard = 200;

/// Runs one `glp` invocation. `args` excludes the program name. When a verb
/// is given no formula it reads one per line from `in` and returns the
/// largest exit code seen.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace glp::cli
