#ifndef LAPASYM_DECOMPOSITION_HPP
#define LAPASYM_DECOMPOSITION_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "lapasym/lattice_sum.hpp"

namespace lapasym::decomposition {

/// 1/N0 = n0/(4N) for n0 in {1,2,3}, 0 when 4 | n.
double inv_N0(long n);

struct ABCRow {
  long k = 0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double a_k = 0.0;   // (pi / (4 sqrt 3)) k / N
  double calA = 0.0;  // sqrt(1 + 4 a_k^2 (1 - a_k^2))
  double inv_N0 = 0.0;
};

/// Rows k = 1..N of the quartic factorization for n >= 4. Every row is
/// checked against the a-priori bounds; a violation throws
/// InternalConsistencyError.
std::vector<ABCRow> abc_rows(long n);

/// Cascade coefficients at one index; entries 1..11 are used, slot 0 is unused.
struct CascadeRow {
  long k = 0;
  double x = 0.0;  // k / N
  double a = 0.0;  // (pi / (4 sqrt 3)) x
  double calA = 0.0;
  std::array<double, 12> alpha{};
  std::array<double, 12> beta{};
  std::array<double, 12> gamma{};
  double beta7_prime = 0.0;
  double gamma7_prime = 0.0;
};

/// Coefficients as smooth functions of x = k/N in [0, 1]. At x = 0 the
/// arctan(t)/t factor takes its limit 1.
CascadeRow cascade_profile(double x);

/// Requires 1 <= k <= N.
CascadeRow cascade(long n, long k);

/// alpha_{k,11} as a function of x = k/N.
double mu_profile(double x);
/// (mu(x) - 1) / x, continued to x = 0.
double mu1_profile(double x);
/// 1 - (pi^2/48) x^2 + (11 pi^4/4608) x^4 - (41 pi^6/221184) x^6
double mu_taylor_head(double x);

struct RQValues {
  long n = 0;
  long N = 0;
  int n0 = 0;
  double R1 = 0.0;
  double R2 = 0.0;
  double R3 = 0.0;
  double R4 = 0.0;
  double R5 = 0.0;
  double Qn = 0.0;
  double Rn_double = 0.0;  // sum_{j,k=1}^N 1/(j^2 + k^2 - (pi^2/3n^2)(j^4 + k^4))
};

RQValues rn_direct(long n, const lattice::SumOptions& options = {});

/// The double sum R_n through partial fractions and digamma values, with
/// no asymptotic truncation. Requires n >= 5.
double rn_via_digamma(long n);

/// (2n^2/pi^2)(R1 - 2R2 + R3 + pi R4 + 2 pi R5 + Qn) - F_n^beta(f2)
double assembly_defect(long n, const lattice::SumOptions& options = {});

struct SmoothProfile {
  std::function<double(double)> g;
  /// derivatives[i] is g^{(i+1)}; may be empty or shorter than needed.
  std::vector<std::function<double(double)>> derivatives;
  std::optional<double> integral;
};

struct EulerMaclaurinResult {
  double sum_approx = 0.0;
  double remainder_bound = 0.0;
  double integral = 0.0;
  bool finite_differences = false;
};

/// Bernoulli-corrected approximation of (1/N) sum_{k=1}^N g(k/N) with
/// correction order p in 1..6. Missing derivatives are taken by central
/// differences with step eps^{1/(p+2)}, which samples g slightly outside
/// [0, 1]; the bound then includes the differencing error.
EulerMaclaurinResult euler_maclaurin(const SmoothProfile& profile, long N, int p);

struct ProfileSample {
  double x;
  std::array<double, 3> mu1;  // from alpha/beta/gamma_{k,8}
  std::array<double, 3> mu2;  // from alpha/beta/gamma_{k,9}
};

struct ProfileComparison {
  double R1_direct = 0.0;
  double R2_direct = 0.0;
  double R1_profile = 0.0;
  double R2_profile = 0.0;
  double inv_N0 = 0.0;
  std::vector<ProfileSample> samples;
};

/// R_{n,1}, R_{n,2} directly and through the three-term profile expansion
/// in 1/N0. Requires n >= 8.
ProfileComparison rn1_rn2_profiles(long n);

}  // namespace lapasym::decomposition

#endif  // LAPASYM_DECOMPOSITION_HPP
