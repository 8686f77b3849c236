#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pairshaper/cli/config.hpp"

namespace pairshaper::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_config = 2,
  exit_numerical = 3,
  exit_infeasible = 4,
};

/// Names accepted by run_command.
const std::vector<std::string>& command_names();

/// Runs one subcommand and writes its artifacts plus meta.json into out_dir
/// (created if needed). Returns the file names written, meta.json last.
/// Throws ConfigError, NumericalError, DesignInfeasible or FormatError.
std::vector<std::string> run_command(const RunConfig& config, const std::string& command,
                                     const std::filesystem::path& out_dir);

/// Full command line: `<tool> <subcommand> --config <path> [--out <dir>]
/// [--formats csv,json,pgm] [--threads N]`. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pairshaper::cli
