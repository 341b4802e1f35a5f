#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turkcrypt::cli {

enum exit_code : int { ok = 0, usage_error = 1, data_error = 2 };

/// Runs one command line (without the program name). Payload goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace turkcrypt::cli
