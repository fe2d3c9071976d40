#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace momentforge::cli {

/// Run one CLI invocation. Returns the process exit code: 0 on success,
/// 2 on validation errors, 3 when an enumeration cap is exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace momentforge::cli
