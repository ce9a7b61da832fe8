#include "lapasym/extrapolation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "lapasym/errors.hpp"

namespace lapasym::extrapolation {

namespace {

double basis_value(int index, double n) {
  switch (index) {
    case 0: return n * n * std::log(n);
    case 1: return n * n;
    case 2: return n;
    default: return 1.0;
  }
}

}  // namespace

ErrorSeries error_series(const lattice::LatticeSpec& spec, const asymptotics::ExpansionForm& model,
                         const std::vector<long>& n_values, const lattice::SumOptions& options) {
  if (n_values.empty()) throw DomainError("error_series: empty ladder");
  ErrorSeries series;
  series.lattice = spec.name;
  series.model = model.label;
  series.records.reserve(n_values.size());
  for (long n : n_values) {
    ErrorRecord r;
    r.n = n;
    r.F = lattice::exact_sum(spec, n, options).value;
    r.model = model.evaluate(static_cast<double>(n));
    r.E = r.F - r.model;
    series.records.push_back(r);
  }
  return series;
}

double plateau_mean(const ErrorSeries& series) {
  if (series.records.empty()) throw DomainError("plateau_mean: empty series");
  std::vector<ErrorRecord> sorted = series.records;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.n > b.n; });
  std::size_t count = std::max<std::size_t>(1, sorted.size() / 10);
  double acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) acc += sorted[i].E;
  return acc / static_cast<double>(count);
}

FitResult fit_expansion(const std::vector<std::pair<long, double>>& values, unsigned basis,
                        const std::array<std::optional<double>, 4>& fixed, const FitOptions& options) {
  std::vector<int> columns;
  for (int i = 0; i < 4; ++i) {
    const bool selected = (basis >> i) & 1u;
    if (selected && fixed[i]) throw FitError("fit_expansion: coefficient both fitted and fixed");
    if (selected) columns.push_back(i);
  }
  if (columns.empty()) throw FitError("fit_expansion: empty basis");
  const auto rows = static_cast<Eigen::Index>(values.size());
  if (values.size() < columns.size() + 2) throw FitError("fit_expansion: ladder shorter than basis size + 2");
  if (!options.allow_mixed_residues) {
    const long residue = values.front().first % 4;
    for (const auto& [n, F] : values)
      if (n % 4 != residue) throw FitError("fit_expansion: ladder mixes residue classes mod 4");
  }

  const auto cols = static_cast<Eigen::Index>(columns.size());
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double n = static_cast<double>(values[r].first);
    double target = values[r].second;
    for (int i = 0; i < 4; ++i)
      if (fixed[i]) target -= *fixed[i] * basis_value(i, n);
    rhs(r) = target;
    for (Eigen::Index c = 0; c < cols; ++c) design(r, c) = basis_value(columns[c], n);
  }
  const Eigen::VectorXd norms = design.colwise().norm().transpose();
  if ((norms.array() == 0.0).any()) throw FitError("fit_expansion: zero basis column");
  const Eigen::MatrixXd scaled = design * norms.cwiseInverse().asDiagonal();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
  qr.setThreshold(1e-13);
  if (qr.rank() < cols) throw FitError("fit_expansion: rank-deficient design");
  const Eigen::VectorXd scaled_solution = qr.solve(rhs);
  const Eigen::VectorXd solution = scaled_solution.cwiseQuotient(norms);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled);
  const auto& sigma = svd.singularValues();
  FitResult result;
  result.condition_estimate = sigma(0) / sigma(sigma.size() - 1);
  for (int i = 0; i < 4; ++i)
    if (fixed[i]) result.coefficients[i] = *fixed[i];
  for (Eigen::Index c = 0; c < cols; ++c) {
    result.coefficients[columns[c]] = solution(c);
    result.fitted[columns[c]] = true;
  }
  for (const auto& [n, F] : values) {
    double model = 0.0;
    for (int i = 0; i < 4; ++i) model += result.coefficients[i] * basis_value(i, static_cast<double>(n));
    result.residual_max = std::max(result.residual_max, std::fabs(F - model));
    result.n_ladder.push_back(n);
  }
  return result;
}

}  // namespace lapasym::extrapolation
