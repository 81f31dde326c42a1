#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monores {

/// Runs one command line (without the program name). Returns 0 on success or a
/// true predicate, 1 on a false predicate, 2 on any error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace monores
