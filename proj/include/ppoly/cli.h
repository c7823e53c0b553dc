#ifndef PPOLY_CLI_H
#define PPOLY_CLI_H

/**
 * Command line surface. run_cli parses argv, writes JSON (or DOT) to
 * out and diagnostics to err, and returns the process exit code:
 * 0 on success, 1 when a requested check fails, 2 on usage errors.
 */

#include <iosfwd>

namespace ppoly {

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace ppoly

#endif
