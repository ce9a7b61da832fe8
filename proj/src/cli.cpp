#include "lapasym/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "lapasym/asymptotic_forms.hpp"
#include "lapasym/errors.hpp"
#include "lapasym/extrapolation.hpp"
#include "lapasym/lattice_sum.hpp"
#include "lapasym/verify.hpp"

namespace lapasym::cli {

namespace {

std::string full(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string short_num(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

std::vector<lattice::LatticeSpec> selected_lattices(const RunConfig& config, bool all_by_default) {
  if (!config.lattice_file.empty()) return {lattice::load_lattice_config(config.lattice_file)};
  std::vector<std::string> names = config.lattices;
  if (names.empty()) {
    names = all_by_default ? std::vector<std::string>{"square", "triangular", "modified_union_jack"}
                           : std::vector<std::string>{"square"};
  }
  std::vector<lattice::LatticeSpec> specs;
  for (const auto& name : names) specs.push_back(lattice::lattice_by_name(name));
  return specs;
}

bool is_builtin(const lattice::LatticeSpec& spec) {
  return spec.name == "square" || spec.name == "triangular" || spec.name == "modified_union_jack";
}

lattice::SumOptions sum_options(const RunConfig& config) {
  lattice::SumOptions options;
  options.workers = effective_workers(config);
  return options;
}

}  // namespace

int cmd_sum(const RunConfig& config, std::ostream& out) {
  if (config.n_values.empty()) throw ConfigError("sum: --n is required");
  const auto options = sum_options(config);
  if (config.csv) out << "lattice,n,F_n,trace,terms,seconds\n";
  for (const auto& spec : selected_lattices(config, false)) {
    for (long n : config.n_values) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = lattice::exact_sum(spec, n, options);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const double trace = result.value / spec.trace_divisor;
      if (config.csv) {
        out << spec.name << ',' << n << ',' << full(result.value) << ',' << full(trace) << ','
            << result.term_count << ',' << full(seconds) << '\n';
      } else {
        out << "lattice=" << spec.name << " n=" << n << " F=" << full(result.value) << " tr=" << full(trace)
            << " terms=" << result.term_count << " time=" << short_num(seconds) << "s\n";
      }
    }
  }
  return ExitCode::ok;
}

std::string gnuplot_script(const std::string& csv_path, const std::vector<std::string>& lattices) {
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set key autotitle columnhead\n"
    << "set terminal pngcairo size 900,900\n"
    << "set output '" << csv_path << ".png'\n"
    << "set multiplot layout 2,1\n"
    << "set xlabel 'n'\nset ylabel 'E_n'\n";
  auto panel = [&](const std::string& title, const std::string& range, const std::string& filter) {
    s << "set title '" << title << "'\n"
      << "set xrange " << range << "\n"
      << "plot ";
    for (std::size_t i = 0; i < lattices.size(); ++i) {
      if (i) s << ", \\\n     ";
      s << "'" << csv_path << "' using 2:((strcol(1) eq '" << lattices[i] << "' && " << filter
        << ") ? $5 : NaN) with linespoints title '" << lattices[i] << "'";
    }
    s << "\n";
  };
  panel("E_n for n = 1..100", "[1:100]", "$2 <= 100");
  panel("E_n for n = 25..2500, step 25", "[25:2500]", "int($2) % 25 == 0");
  s << "unset multiplot\n";
  return s.str();
}

int cmd_errors(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.plot.empty() && config.output.empty())
    throw ConfigError("--plot needs --output so the script can reference the CSV");
  const auto options = sum_options(config);
  std::vector<long> ladder;
  if (!config.n_values.empty()) {
    ladder = config.n_values;
    if (config.ladder) {
      auto extra = config.ladder->values();
      ladder.insert(ladder.end(), extra.begin(), extra.end());
    }
  } else {
    ladder = config.ladder.value_or(Ladder{}).values();
  }
  std::set<long> rows(ladder.begin(), ladder.end());
  if (!config.plot.empty())
    for (long n = 1; n <= 100; ++n) rows.insert(n);
  const std::vector<long> n_values(rows.begin(), rows.end());

  std::ofstream file;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) throw IOError("cannot open '" + config.output + "' for writing");
  }
  std::ostream& csv = config.output.empty() ? out : file;
  std::ostream& summary = config.output.empty() ? err : out;

  csv << "lattice,n,F_n,model,E_n\n";
  std::vector<std::string> names;
  for (const auto& spec : selected_lattices(config, true)) {
    asymptotics::ExpansionForm model;
    model.label = "zero";
    if (config.model == "expansion") {
      if (!is_builtin(spec)) throw ConfigError("no expansion model for custom lattice '" + spec.name + "'; use --model zero");
      model = asymptotics::lattice_model(spec.name);
    }
    const auto series = extrapolation::error_series(spec, model, n_values, options);
    extrapolation::ErrorSeries main_ladder{{}, series.lattice, series.model};
    for (const auto& r : series.records) {
      csv << spec.name << ',' << r.n << ',' << full(r.F) << ',' << full(r.model) << ',' << full(r.E) << '\n';
      if (std::find(ladder.begin(), ladder.end(), r.n) != ladder.end()) main_ladder.records.push_back(r);
    }
    summary << "plateau " << spec.name << ": mean E_n over top decile of n = "
            << short_num(extrapolation::plateau_mean(main_ladder)) << '\n';
    names.push_back(spec.name);
  }
  if (file.is_open()) {
    file.flush();
    if (!file) throw IOError("write to '" + config.output + "' failed");
  }

  if (!config.plot.empty()) {
    std::ofstream script(config.plot);
    if (!script) throw IOError("cannot open '" + config.plot + "' for writing");
    script << gnuplot_script(config.output, names);
    if (!script) throw IOError("write to '" + config.plot + "' failed");
  }
  return ExitCode::ok;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  verify::SuiteOptions options;
  options.max_n = config.max_n;
  options.n0 = config.n0.value_or(0);
  options.tol = config.tol;
  options.workers = effective_workers(config);
  bool all_passed = true;
  for (const auto& report : verify::run_suites(config.suite, options)) {
    for (const auto& c : report.checks)
      out << (c.passed ? "  pass  " : "  FAIL  ") << c.name << ": " << c.detail << '\n';
    out << (report.passed() ? "PASS " : "FAIL ") << "suite " << report.suite << '\n';
    all_passed = all_passed && report.passed();
  }
  return all_passed ? ExitCode::ok : ExitCode::verify_failed;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "sum") return cmd_sum(config, out);
    if (config.subcommand == "errors") return cmd_errors(config, out, err);
    if (config.subcommand == "verify") return cmd_verify(config, out);
    throw ConfigError("unknown subcommand '" + config.subcommand + "'");
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return ExitCode::config_error;
  } catch (const IOError& e) {
    err << "i/o error: " << e.what() << '\n';
    return ExitCode::io_error;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return ExitCode::numerical_error;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParseOutcome parsed;
  try {
    parsed = parse_command_line(args);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return ExitCode::config_error;
  }
  if (parsed.help) {
    out << *parsed.help;
    return ExitCode::ok;
  }
  return run(parsed.config, out, err);
}

}  // namespace lapasym::cli
