#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace depthcraft {

inline constexpr const char* kToolVersion = "depthcraft 1.0.0";

// Command-line entry point; `args` excludes the program name. Returns the
// process exit code: 0 success, 1 domain failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace depthcraft
