#pragma once

namespace dtforge {

/// Parses arguments, dispatches the subcommand, and returns the process exit
/// code: 0 ok, 2 usage/parse, 3 resolution, 4 instance construction, 5 io,
/// 6 validation findings.
int run_cli(int argc, const char* const* argv);

}  // namespace dtforge
