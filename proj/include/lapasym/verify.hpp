#ifndef LAPASYM_VERIFY_HPP
#define LAPASYM_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace lapasym::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct SuiteOptions {
  long max_n = 0;  // identities: 0 means 200
  int n0 = 0;      // asymptotics: residue class for the n0-dependent checks
  double tol = 1e-11;
  int workers = 0;
};

SuiteReport specfun_suite(const SuiteOptions& options);
SuiteReport identities_suite(const SuiteOptions& options);
SuiteReport asymptotics_suite(const SuiteOptions& options);
SuiteReport quadrature_suite(const SuiteOptions& options);

/// Suite by name; "all" runs every suite in the order above.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options);

}  // namespace lapasym::verify

#endif  // LAPASYM_VERIFY_HPP
