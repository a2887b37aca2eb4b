#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locsym {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 pass, 1 reciprocity failure, 2 hypothesis violation, 3 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locsym
