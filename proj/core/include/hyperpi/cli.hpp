#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperpi {

/*
 * Runs one CLI invocation against the given streams. args is argv without
 * the program name. Returns the process exit code:
 *
 *   0  success
 *   1  a verification failed (including refused translations)
 *   2  usage problems or malformed input (catalog text, bad literals)
 *   3  numerical failures (divergent evaluation, lost precision)
 *
 * The catalog comes from --catalog PATH, else the HYPERPI_CATALOG
 * environment variable, else the builtin one. A user catalog replaces the
 * builtin entirely and is verified before anything runs.
 */
int cli_dispatch(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err);

} // namespace hyperpi
