#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace klspecht {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the KL table cache directory.
inline constexpr const char* kCacheDirEnv = "KLSPECHT_CACHE_DIR";

/// Runs one command; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klspecht
