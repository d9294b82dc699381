#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domino {

// Entry point behind the command line binary. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace domino
