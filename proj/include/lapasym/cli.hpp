#ifndef LAPASYM_CLI_HPP
#define LAPASYM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lapasym/run_config.hpp"

namespace lapasym::cli {

enum ExitCode : int { ok = 0, verify_failed = 1, config_error = 2, numerical_error = 3, io_error = 4 };

int cmd_sum(const RunConfig& config, std::ostream& out);
int cmd_errors(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Dispatches on config.subcommand and maps exceptions to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, report. args exclude the program name.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// gnuplot script drawing E_n per lattice in two panels (n <= 100; 25 | n).
std::string gnuplot_script(const std::string& csv_path, const std::vector<std::string>& lattices);

}  // namespace lapasym::cli

#endif  // LAPASYM_CLI_HPP
