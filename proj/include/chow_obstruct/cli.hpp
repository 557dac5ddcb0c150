#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chowob::cli {

/// Runs one invocation (arguments without the program name). Returns the exit code:
/// 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count for classify: CHOW_OBSTRUCT_THREADS when set, else the hardware count.
unsigned worker_threads();

}  // namespace chowob::cli
