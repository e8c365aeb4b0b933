#pragma once

#include <string>
#include <vector>

namespace chevalley::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
// inconsistency.
int run(const std::vector<std::string>& args);

}  // namespace chevalley::cli
