#pragma once

#include <string>
#include <vector>

namespace dnacode::cli {

// Full command-line front end. Returns the process exit code:
// 0 success, 2 input error, 3 corruption/desynchronization, 4 config error.
int run(const std::vector<std::string>& args);

}  // namespace dnacode::cli
