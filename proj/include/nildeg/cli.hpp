#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nildeg {

// Entry point behind main(), testable in-process. args excludes the program
// name. Reports go to `out`; diagnostics and timing go to `err`.
// Exit codes: 0 success/affirmative, 1 definite negative, 2 usage,
// 3 capacity, 4 inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nildeg
