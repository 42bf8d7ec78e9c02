#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trig::cli {

/// Runs a full command line (without the program name). All regular
/// output goes to `out`, structured errors to `err`. Exit codes:
/// 0 success, 2 usage or malformed input, 1 domain error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace trig::cli
