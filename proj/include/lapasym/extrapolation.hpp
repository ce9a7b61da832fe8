#ifndef LAPASYM_EXTRAPOLATION_HPP
#define LAPASYM_EXTRAPOLATION_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lapasym/asymptotic_forms.hpp"
#include "lapasym/lattice_sum.hpp"

namespace lapasym::extrapolation {

struct ErrorRecord {
  long n = 0;
  double F = 0.0;
  double model = 0.0;
  double E = 0.0;  // F - model
};

struct ErrorSeries {
  std::vector<ErrorRecord> records;
  std::string lattice;
  std::string model;
};

ErrorSeries error_series(const lattice::LatticeSpec& spec, const asymptotics::ExpansionForm& model,
                         const std::vector<long>& n_values, const lattice::SumOptions& options = {});

/// Mean E_n over the largest tenth of the ladder (at least one record).
double plateau_mean(const ErrorSeries& series);

/// Basis functions n^2 log n, n^2, n, 1 in that order.
enum BasisBit : unsigned { n2_log_n = 1u, n2 = 2u, n1 = 4u, constant = 8u, all_terms = 15u };

struct FitOptions {
  /// Accept ladders mixing residue classes mod 4.
  bool allow_mixed_residues = false;
};

struct FitResult {
  std::array<double, 4> coefficients{};
  std::array<bool, 4> fitted{};
  double residual_max = 0.0;
  std::vector<long> n_ladder;
  double condition_estimate = 0.0;
};

/// Least squares on the selected basis columns after subtracting the fixed
/// coefficients. Columns are scaled to unit norm and factored by
/// column-pivoted Householder QR. Throws FitError on rank deficiency, a
/// short ladder, or (unless allowed) mixed residue classes.
FitResult fit_expansion(const std::vector<std::pair<long, double>>& values, unsigned basis,
                        const std::array<std::optional<double>, 4>& fixed = {}, const FitOptions& options = {});

}  // namespace lapasym::extrapolation

#endif  // LAPASYM_EXTRAPOLATION_HPP
