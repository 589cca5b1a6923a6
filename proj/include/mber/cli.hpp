#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mber::cli {

// Runs one command line (without the program name). Streams receive exactly
// what the mber binary would print. Exit codes: 0 success, 2 usage error,
// 3 domain/validation/incompatibility error, 4 file error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mber::cli
