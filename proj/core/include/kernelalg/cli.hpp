#ifndef KERNELALG_CLI_HPP
#define KERNELALG_CLI_HPP

namespace kernelalg {

// Command-line entry point behind the `kernelalg` tool; exposed for tests.
// Exit status: 0 all checks pass, 1 check failure (report still written),
// 2 config parse error, 3 space build error.
int cli_main(int argc, const char* const* argv);

}  // namespace kernelalg

#endif
