#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqrank::cli {

/// Runs one command line (without the program name). Exit codes: 0 yes or
/// success, 1 no (equiv, verify), 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqrank::cli
