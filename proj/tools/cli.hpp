#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exactreal::cli {

enum ExitCode { Ok = 0, DomainError = 1, UsageError = 2 };

/// Runs one command line (args excluding the program name). Results go to
/// out, one machine-readable JSON error line to err on failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace exactreal::cli
