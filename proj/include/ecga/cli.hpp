#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecga::cli {

/// Entry point of the `ecga` tool; `args` excludes the program name.
/// Exit codes: 0 success, 1 runtime or domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecga::cli
