#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcb {

/// Entry point of the command-line tool. `args` excludes the program name.
/// Returns 0 for yes or success, 1 for no, 2 for usage and data errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rcb
