#ifndef VSPREAD_CLI_HPP
#define VSPREAD_CLI_HPP

#include <string>
#include <vector>

namespace vspread {

/* The whole CLI behind a callable seam so tests can drive it in-process.
 * args excludes argv[0].  Exit codes: 0 ok, 1 usage, 2 invalid input,
 * 3 resource cap, 4 property/consistency violation. */
struct CommandResult {
    int exit_code = 0;
    std::string out; // byte-deterministic payload
    std::string err; // diagnostics, progress, timings
};

CommandResult run_command(const std::vector<std::string>& args);

} // namespace vspread

#endif
