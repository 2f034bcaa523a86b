#pragma once

#include <iosfwd>

namespace surreal::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

// Runs one command line: eval, tree, laws or repl. Standard streams are
// passed in so the whole interface can be driven from tests. `prompt`
// enables the REPL prompt (the tool sets it when stdin is a terminal).
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err, bool prompt = false);

}  // namespace surreal::cli
