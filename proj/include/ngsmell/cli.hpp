#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ngsmell {

// Exit codes: 0 = clean, 1 = findings present, 2 = fatal error / bad usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ngsmell
