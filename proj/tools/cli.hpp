#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qm::cli {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

/// Runs one qmcli invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qm::cli
