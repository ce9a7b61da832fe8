#ifndef LAPASYM_SPECFUN_HPP
#define LAPASYM_SPECFUN_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace lapasym::specfun {

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Exact ratio num/den in lowest terms, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Bernoulli numbers B_0..B_30 (convention B_1 = -1/2), generated once by the
/// exact recurrence sum_{k<=m} C(m+1,k) B_k = 0 in 128-bit rational arithmetic.
class BernoulliTable {
public:
  static constexpr int max_index = 30;

  BernoulliTable();

  const Rational& exact(int index) const;
  double operator[](int index) const;

private:
  std::array<Rational, max_index + 1> exact_{};
  std::array<double, max_index + 1> value_{};
};

const BernoulliTable& bernoulli_table();

struct FundamentalConstants {
  double catalan_G;
  double euler_gamma;
  double gamma_quarter;  // Gamma(1/4)
  double gamma_third;    // Gamma(1/3)
  double eta_at_i;       // Dedekind eta at tau = i, from the q-series
  double pi;
  double pi_sq;
  double pi_three_quarters;
};

const FundamentalConstants& constants();

/// Clausen function Cl2(theta) = sum_{k>=1} sin(k theta) / k^2.
///
/// theta is reduced to [0, pi] using oddness and 2*pi periodicity. On
/// [0, 2*pi/3] the log-corrected power series about 0 is summed; on
/// (2*pi/3, pi] the duplication formula gives a series about pi. Both
/// converge at least like 9^-n. Throws DomainError on non-finite input.
double clausen_cl2(double theta);

/// Digamma on the real line. Poles at 0, -1, -2, ... throw PoleError.
/// Negative arguments go through the reflection formula, small ones are
/// shifted up to x >= 10 before the asymptotic series is applied.
double digamma(double x);

/// Complex digamma with the same shift + asymptotic scheme. Arguments with
/// Re z <= 0 are reflected first. Satisfies digamma(conj z) == conj(digamma z).
std::complex<double> digamma(std::complex<double> z);

/// Bernoulli polynomial B_p(x), 0 <= p <= BernoulliTable::max_index.
double bernoulli_polynomial(int p, double x);

/// B_p evaluated on the fractional part of x (period-1 extension), 1 <= p <= 8.
double periodic_bernoulli(int p, double x);

/// Upper bound for |B_p(x)| on [0, 1), 1 <= p <= 8.
double periodic_bernoulli_max_abs(int p);

/// -log((q;q)_inf) = sum_{k>=1} q^k / (k (1 - q^k)) for 0 < q < 1.
double log_q_pochhammer_inv(double q);

/// pi * cot(pi z), stable for large |Im z|.
std::complex<double> pi_cot_pi(std::complex<double> z);

}  // namespace lapasym::specfun

#endif  // LAPASYM_SPECFUN_HPP
