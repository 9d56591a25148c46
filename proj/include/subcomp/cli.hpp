#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subcomp::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kCapacity = 3 };

/// Runs one command line. `args` excludes the program name. Graphs are read
/// from the positional path, or from `in` when it is "-" or absent. Results
/// go to `out` as one JSON document; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace subcomp::cli
