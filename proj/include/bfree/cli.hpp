#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfree::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 domain error (JSON object on err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bfree::cli
