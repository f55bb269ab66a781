#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wallcross::cli {

/// Runs one invocation; args excludes the program name. Returns the exit
/// code: 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// True when WALLCROSS_ASCII is set to a non-empty value other than "0".
bool ascii_forced();

}  // namespace wallcross::cli
