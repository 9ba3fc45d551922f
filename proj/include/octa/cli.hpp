#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octa::cli {

/// Dispatches one invocation. args excludes the program name. Structured
/// results go to out; usage problems go to err. Returns 0 on success, 1 on
/// a domain error (reported as a JSON error object on out), 2 on a usage
/// error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace octa::cli
