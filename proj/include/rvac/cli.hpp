#pragma once

namespace rvac {

// Entry point of the rvac command-line tool.  Returns the process exit
// status: 0 when the requested analysis ran (whatever its verdict), nonzero
// on usage, configuration, or state errors.
int run_cli(int argc, const char* const* argv);

}  // namespace rvac
