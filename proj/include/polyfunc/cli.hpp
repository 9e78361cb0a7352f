#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyfunc {

/// Run the command-line front end. Exit codes: 0 success, 1 domain error,
/// 2 parse error, 3 budget refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyfunc
