#pragma once

// Command-line front end. dispatch() is the whole CLI as a function so the
// binary stays a thin wrapper and tests can drive it directly.
// Exit codes: 0 = all certificates pass, 1 = verification failure (JSON
// diagnostic on stdout), 2 = usage or malformed input.

#include <ostream>
#include <string>
#include <vector>

namespace jck {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jck
