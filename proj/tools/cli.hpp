#pragma once

#include <string>
#include <vector>

namespace colnum::cli {

// Runs one CLI invocation; returns the process exit code (0 success,
// 1 usage/validation error, 2 internal contract violation) and appends
// everything that would reach stdout/stderr to the given sinks.
int run(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace colnum::cli
