#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace o1p {

// Runs one command line (without the program name). Returns the exit status:
// 0 on success, 1 when the input fails validation, 2 on usage errors.
// "-" as a path means `in` or `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace o1p
