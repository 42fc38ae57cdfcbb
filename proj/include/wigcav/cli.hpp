#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wigcav {

/// Parses and runs one command-line invocation (args exclude the program
/// name). Exit codes: 0 success, 1 usage error, 2 verification failure,
/// 3 domain error (unstable cavity where stability is required).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wigcav
