#pragma once

#include <string>
#include <vector>

namespace structsums::cli {

/// Parse and run one CLI invocation (argv without the program name).
/// Returns the process exit code: 0 success, 2 usage error, 3 numeric or
/// protocol error.
int run(const std::vector<std::string>& args);

} // namespace structsums::cli
