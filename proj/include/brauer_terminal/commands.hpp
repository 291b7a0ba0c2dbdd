#pragma once

#include "brauer_terminal/model.hpp"
#include "brauer_terminal/report.hpp"
#include "brauer_terminal/resolution.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace bterm {

/// Process exit codes of brauer-terminal.
enum ExitCode : int {
  kExitOk = 0,             ///< success, terminal-certified
  kExitError = 1,          ///< bad input or engine error
  kExitBadStratum = 2,     ///< bad-stratum-found
  kExitIndeterminate = 3,  ///< indeterminate
};

struct CommandOptions {
  std::string command;  ///< boundary | discrepancy | resolve | certify | remark
  std::optional<std::filesystem::path> model;
  int depth = kDefaultDepth;
  int max_rounds = kDefaultMaxRounds;
  bool no_fixup = false;
  std::optional<std::filesystem::path> out;  ///< newline-delimited JSON records
  int threads = 0;                           ///< 0: BRAUER_TERMINAL_THREADS, else OpenMP default
};

/// Runs one subcommand: human-readable text on `out`, diagnostics on `err`, machine records
/// to options.out when set. Never throws; errors become kExitError.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

/// Thread cap from BRAUER_TERMINAL_THREADS, 0 when unset or invalid.
int threads_from_environment();

/// One JSON record per line; rationals are [numerator, denominator] pairs.
std::string discrepancy_record(const BrauerModel& model, const DiscrepancyReport& report);
std::string certificate_record(const TerminalityCertificate& cert);

}  // namespace bterm
