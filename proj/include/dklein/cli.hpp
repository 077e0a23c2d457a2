#pragma once

#include <iosfwd>

namespace dklein {

/* Runs the command-line tool.  JSON results go to `out`; human-oriented
 * progress (the verify per-check lines) goes to `err`.  Returns the process
 * exit code: 0 success, 1 verification failure, 2 parse/usage error. */
int cli_run(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace dklein
