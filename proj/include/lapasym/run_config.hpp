#ifndef LAPASYM_RUN_CONFIG_HPP
#define LAPASYM_RUN_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

namespace lapasym::cli {

struct Ladder {
  long start = 25;
  long stop = 2500;
  long step = 25;

  std::vector<long> values() const;
  friend bool operator==(const Ladder&, const Ladder&) = default;
};

/// Parsed command line. Unset fields keep their defaults; subcommand
/// defaults (lattice list, ladder, suite sizes) are applied at run time so
/// the textual form stays minimal.
struct RunConfig {
  std::string subcommand;  // sum | errors | verify
  std::vector<std::string> lattices;
  std::string lattice_file;
  std::vector<long> n_values;
  std::optional<Ladder> ladder;
  std::string model = "expansion";  // expansion | zero
  std::string output;               // empty: stdout
  std::string plot;
  std::string suite = "all";
  long max_n = 0;  // 0: suite default
  std::optional<int> n0;
  double tol = 1e-11;
  int workers = 0;
  bool csv = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct ParseOutcome {
  RunConfig config;
  std::optional<std::string> help;  // set when --help was requested
};

/// Arguments exclude the program name. Throws ConfigError on bad input.
ParseOutcome parse_command_line(const std::vector<std::string>& args);

/// Canonical argument vector; parse_command_line(to_args(c)).config == c.
std::vector<std::string> to_args(const RunConfig& config);

/// Single-line shell-quoted rendering of to_args and its inverse.
std::string to_text(const RunConfig& config);
RunConfig from_text(const std::string& text);

/// "start:stop:step"
Ladder parse_ladder(const std::string& text);
std::string format_ladder(const Ladder& ladder);

/// Worker count: --workers if positive, else LAPASYM_WORKERS, else 0 (auto).
int effective_workers(const RunConfig& config);

}  // namespace lapasym::cli

#endif  // LAPASYM_RUN_CONFIG_HPP
