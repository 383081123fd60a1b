#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhombic {

// Exit codes: 0 success, 1 verification failure, 2 usage error or malformed input.
// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rhombic
