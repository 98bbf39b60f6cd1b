#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hecke::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain or consistency error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
