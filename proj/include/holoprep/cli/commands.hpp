#pragma once

#include <string>
#include <vector>

namespace holoprep::cli {

inline constexpr const char *kJobsEnv = "HOLOPREP_JOBS";

// Exit codes: 0 success, 1 configuration/input/I-O failure, 2 usage error.
int run(int argc, const char *const *argv);
// `args` excludes the program name.
int run(const std::vector<std::string> &args);

} // namespace holoprep::cli
