#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trigverify::cli {

// Exit codes: 0 all checks pass, 1 a claim failed, 2 usage or I/O error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace trigverify::cli
