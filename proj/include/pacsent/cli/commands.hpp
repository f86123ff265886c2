#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pacsent/cli/run_config.hpp"

namespace pacsent::cli {

enum ExitCode : int {
  kSuccess = 0,
  kArgumentError = 2,
  kNumericRangeError = 3,
  kIoError = 4,
};

/// Parses argv-style arguments (without the program name), dispatches the
/// subcommand and writes results to `out` (or --output). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already-assembled configuration. Throws library errors.
void execute(const RunConfig& config, std::ostream& out);

void cmd_overlap(const RunConfig& config, std::ostream& out);
void cmd_concurrence(const RunConfig& config, std::ostream& out);
void cmd_sweep(const RunConfig& config, std::ostream& out);
void cmd_pcrit(const RunConfig& config, std::ostream& out);
void cmd_fit(const RunConfig& config, std::ostream& out);

/// Reads (x, y) pairs from the first two columns of a CSV file with a header
/// row. Throws IoError when unreadable, InvalidArgument when malformed.
std::vector<DataPoint> read_table(const std::string& path);

}  // namespace pacsent::cli
