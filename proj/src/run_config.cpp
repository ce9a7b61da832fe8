#include "lapasym/run_config.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>

#include "lapasym/errors.hpp"

namespace lapasym::cli {

std::vector<long> Ladder::values() const {
  if (start < 1 || step < 1 || stop < start) throw ConfigError("ladder needs 1 <= start <= stop and step >= 1");
  std::vector<long> out;
  for (long n = start; n <= stop; n += step) out.push_back(n);
  return out;
}

Ladder parse_ladder(const std::string& text) {
  Ladder ladder;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%ld:%ld:%ld%c", &ladder.start, &ladder.stop, &ladder.step, &tail) != 3)
    throw ConfigError("ladder must be start:stop:step, got '" + text + "'");
  ladder.values();
  return ladder;
}

std::string format_ladder(const Ladder& ladder) {
  return std::to_string(ladder.start) + ":" + std::to_string(ladder.stop) + ":" + std::to_string(ladder.step);
}

namespace {

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

}  // namespace

ParseOutcome parse_command_line(const std::vector<std::string>& args) {
  ParseOutcome outcome;
  RunConfig& c = outcome.config;
  std::string ladder_text;
  std::optional<int> n0;

  CLI::App app{"Exact lattice sums, asymptotic expansions and their cross-checks", "lapasym"};
  app.require_subcommand(1);
  app.add_option("--workers", c.workers, "Summation threads (0: LAPASYM_WORKERS or hardware)")->check(CLI::NonNegativeNumber);

  auto* sum = app.add_subcommand("sum", "Compute F_n and tr(L^+)");
  sum->add_option("--lattice", c.lattices, "square | triangular | modified_union_jack (repeatable)");
  sum->add_option("--lattice-file", c.lattice_file, "Custom lattice description");
  sum->add_option("--n", c.n_values, "Grid size(s)")->required();
  sum->add_flag("--csv", c.csv, "CSV output");
  sum->add_option("--workers", c.workers, "Summation threads")->check(CLI::NonNegativeNumber);

  auto* errors = app.add_subcommand("errors", "E_n = F_n - model over a ladder of n");
  errors->add_option("--lattice", c.lattices, "Lattice (repeatable; default all built-ins)");
  errors->add_option("--lattice-file", c.lattice_file, "Custom lattice description");
  errors->add_option("--n", c.n_values, "Explicit n values");
  errors->add_option("--ladder", ladder_text, "start:stop:step (default 25:2500:25)");
  errors->add_option("--model", c.model, "expansion | zero")->check(CLI::IsMember({"expansion", "zero"}));
  errors->add_option("--output", c.output, "CSV path (default stdout)");
  errors->add_option("--plot", c.plot, "Write a gnuplot script to this path");
  errors->add_option("--workers", c.workers, "Summation threads")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run the cross-check suites");
  verify->add_option("--suite", c.suite, "specfun | identities | asymptotics | quadrature | all")
      ->check(CLI::IsMember({"specfun", "identities", "asymptotics", "quadrature", "all"}));
  verify->add_option("--max-n", c.max_n, "Largest n used by the identity suite")->check(CLI::NonNegativeNumber);
  verify->add_option("--n0", n0, "Residue class n mod 4 for the asymptotic suite")->check(CLI::Range(0, 3));
  verify->add_option("--tol", c.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--workers", c.workers, "Summation threads")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.help = app.help();
    for (auto* sub : app.get_subcommands())
      outcome.help = sub->help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (!ladder_text.empty()) c.ladder = parse_ladder(ladder_text);
  c.n0 = n0;
  for (long n : c.n_values)
    if (n < 1) throw ConfigError("n must be positive");
  if (!c.lattice_file.empty() && !c.lattices.empty())
    throw ConfigError("--lattice and --lattice-file are mutually exclusive");
  return outcome;
}

std::vector<std::string> to_args(const RunConfig& c) {
  const RunConfig defaults;
  std::vector<std::string> out{c.subcommand};
  auto add = [&out](const std::string& flag, const std::string& value) {
    out.push_back(flag);
    out.push_back(value);
  };
  for (const auto& l : c.lattices) add("--lattice", l);
  if (!c.lattice_file.empty()) add("--lattice-file", c.lattice_file);
  for (long n : c.n_values) add("--n", std::to_string(n));
  if (c.ladder) add("--ladder", format_ladder(*c.ladder));
  if (c.model != defaults.model) add("--model", c.model);
  if (!c.output.empty()) add("--output", c.output);
  if (!c.plot.empty()) add("--plot", c.plot);
  if (c.suite != defaults.suite) add("--suite", c.suite);
  if (c.max_n != defaults.max_n) add("--max-n", std::to_string(c.max_n));
  if (c.n0) add("--n0", std::to_string(*c.n0));
  if (c.tol != defaults.tol) add("--tol", format_double(c.tol));
  if (c.workers != defaults.workers) add("--workers", std::to_string(c.workers));
  if (c.csv) out.push_back("--csv");
  return out;
}

std::string to_text(const RunConfig& config) {
  std::string text;
  for (const auto& arg : to_args(config)) {
    if (!text.empty()) text += ' ';
    const bool plain = !arg.empty() && arg.find_first_of(" \t'\"\\") == std::string::npos;
    if (plain) {
      text += arg;
      continue;
    }
    text += '\'';
    for (char ch : arg) {
      if (ch == '\'')
        text += "'\\''";
      else
        text += ch;
    }
    text += '\'';
  }
  return text;
}

RunConfig from_text(const std::string& text) {
  std::vector<std::string> args;
  std::string current;
  bool in_token = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\'') {
      in_token = true;
      const auto close = text.find('\'', i + 1);
      if (close == std::string::npos) throw ConfigError("unterminated quote in run configuration");
      current.append(text, i + 1, close - i - 1);
      i = close;
    } else if (ch == '\\' && i + 1 < text.size()) {
      in_token = true;
      current += text[++i];
    } else if (ch == ' ' || ch == '\t') {
      if (in_token) args.push_back(current);
      current.clear();
      in_token = false;
    } else {
      in_token = true;
      current += ch;
    }
  }
  if (in_token) args.push_back(current);
  return parse_command_line(args).config;
}

int effective_workers(const RunConfig& config) {
  if (config.workers > 0) return config.workers;
  if (const char* env = std::getenv("LAPASYM_WORKERS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  return 0;
}

}  // namespace lapasym::cli
