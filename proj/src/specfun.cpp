#include "lapasym/specfun.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lapasym/errors.hpp"

namespace lapasym::specfun {

namespace {

__extension__ typedef __int128 i128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Rational128 {
  i128 num = 0;
  i128 den = 1;
};

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalConsistencyError("Bernoulli recurrence overflowed 128 bits");
  return r;
}

Rational128 reduce(Rational128 r) {
  i128 g = gcd128(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  return r;
}

Rational128 add(Rational128 a, Rational128 b) {
  i128 g = gcd128(a.den, b.den);
  i128 lhs = checked_mul(a.num, b.den / g);
  i128 rhs = checked_mul(b.num, a.den / g);
  i128 num;
  if (__builtin_add_overflow(lhs, rhs, &num)) throw InternalConsistencyError("Bernoulli recurrence overflowed 128 bits");
  return reduce({num, checked_mul(a.den / g, b.den)});
}

Rational128 scale(Rational128 a, i128 num, i128 den) {
  i128 g1 = gcd128(a.num, den);
  i128 g2 = gcd128(num, a.den);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return reduce({checked_mul(a.num / g1, num / g2), checked_mul(a.den / g2, den / g1)});
}

// Asymptotic tail -sum_{k=1}^{7} B_{2k} / (2k z^{2k}); truncation error at
// |z| >= 10 is below B_16 / (16 * 10^16) ~ 5e-17.
template <typename T>
T digamma_asymptotic(T z) {
  const auto& bt = bernoulli_table();
  const T inv2 = T(1.0) / (z * z);
  T power = inv2;
  T tail = T(0.0);
  for (int k = 1; k <= 7; ++k) {
    tail += power * (bt[2 * k] / (2.0 * k));
    power *= inv2;
  }
  return std::log(z) - T(0.5) / z - tail;
}

constexpr double shift_threshold = 10.0;

double clausen_series_origin(double t) {
  // t - t log t + sum_n |B_2n| t^{2n+1} / (2n (2n+1)!)
  const auto& bt = bernoulli_table();
  double sum = t - t * std::log(t);
  double t2 = t * t;
  double power = t;
  double factorial = 1.0;  // (2n+1)!
  for (int n = 1; 2 * n <= BernoulliTable::max_index; ++n) {
    power *= t2;
    factorial *= (2.0 * n) * (2.0 * n + 1.0);
    double term = std::fabs(bt[2 * n]) / (2.0 * n * factorial) * power;
    sum += term;
    if (term < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

double clausen_series_pi(double x) {
  // Cl2(pi - x) = Cl2(x) - Cl2(2x)/2 = x log 2 + sum_n |B_2n| (1 - 4^n) x^{2n+1} / (2n (2n+1)!)
  if (x == 0.0) return 0.0;
  const auto& bt = bernoulli_table();
  double sum = x * std::log(2.0);
  double x2 = x * x;
  double power = x;
  double factorial = 1.0;
  double four_n = 1.0;
  for (int n = 1; 2 * n <= BernoulliTable::max_index; ++n) {
    power *= x2;
    factorial *= (2.0 * n) * (2.0 * n + 1.0);
    four_n *= 4.0;
    double term = std::fabs(bt[2 * n]) * (1.0 - four_n) / (2.0 * n * factorial) * power;
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

}  // namespace

BernoulliTable::BernoulliTable() {
  std::array<Rational128, max_index + 1> b{};
  b[0] = {1, 1};
  for (int m = 1; m <= max_index; ++m) {
    Rational128 acc{0, 1};
    i128 binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc = add(acc, scale(b[k], binom, 1));
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = scale(acc, -1, m + 1);
  }
  for (int m = 0; m <= max_index; ++m) {
    if (b[m].num > std::numeric_limits<std::int64_t>::max() || b[m].num < std::numeric_limits<std::int64_t>::min() ||
        b[m].den > std::numeric_limits<std::int64_t>::max()) {
      throw InternalConsistencyError("Bernoulli number does not fit in 64 bits");
    }
    exact_[m] = {static_cast<std::int64_t>(b[m].num), static_cast<std::int64_t>(b[m].den)};
    value_[m] = exact_[m].value();
  }
}

const Rational& BernoulliTable::exact(int index) const {
  if (index < 0 || index > max_index) throw DomainError("Bernoulli index out of range: " + std::to_string(index));
  return exact_[index];
}

double BernoulliTable::operator[](int index) const {
  if (index < 0 || index > max_index) throw DomainError("Bernoulli index out of range: " + std::to_string(index));
  return value_[index];
}

const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table;
  return table;
}

const FundamentalConstants& constants() {
  static const FundamentalConstants c = [] {
    FundamentalConstants k{};
    k.catalan_G = 0.91596559417721901505;
    k.euler_gamma = 0.57721566490153286061;
    k.gamma_quarter = 3.6256099082219083119;
    k.gamma_third = 2.6789385347077476337;
    k.pi = pi;
    k.pi_sq = pi * pi;
    k.pi_three_quarters = std::pow(pi, 0.75);
    // eta(i) = q^{1/24} (q;q)_inf with q = e^{-2 pi}
    k.eta_at_i = std::exp(-pi / 12.0 - log_q_pochhammer_inv(std::exp(-2.0 * pi)));
    return k;
  }();
  return c;
}

double clausen_cl2(double theta) {
  if (!std::isfinite(theta)) throw DomainError("clausen_cl2: non-finite argument");
  double t = std::remainder(theta, 2.0 * pi);  // [-pi, pi]
  double sign = 1.0;
  if (t < 0.0) {
    sign = -1.0;
    t = -t;
  }
  if (t == 0.0) return 0.0;
  if (t <= 2.0 * pi / 3.0) return sign * clausen_series_origin(t);
  return sign * clausen_series_pi(pi - t);
}

double digamma(double x) {
  if (!std::isfinite(x)) throw DomainError("digamma: non-finite argument");
  if (x <= 0.0 && x == std::nearbyint(x)) throw PoleError("digamma: pole at non-positive integer", x);
  if (x < 0.0) {
    double r = x - std::nearbyint(x);
    return digamma(1.0 - x) - pi / std::tan(pi * r);
  }
  double acc = 0.0;
  while (x < shift_threshold) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return acc + digamma_asymptotic(x);
}

std::complex<double> pi_cot_pi(std::complex<double> z) {
  // cot(a + ib) = (sin 2a - i sinh 2b) / (cosh 2b - cos 2a)
  double a = pi * (z.real() - std::nearbyint(z.real()));
  double b = pi * z.imag();
  if (std::fabs(b) > 350.0) return {0.0, b > 0 ? -pi : pi};
  double denom = std::cosh(2.0 * b) - std::cos(2.0 * a);
  return pi * std::complex<double>(std::sin(2.0 * a) / denom, -std::sinh(2.0 * b) / denom);
}

std::complex<double> digamma(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("digamma: non-finite argument");
  if (z.imag() == 0.0) {
    if (z.real() <= 0.0 && z.real() == std::nearbyint(z.real()))
      throw PoleError("digamma: pole at non-positive integer", z.real());
    return {digamma(z.real()), 0.0};
  }
  if (z.real() <= 0.0) return digamma(1.0 - z) - pi_cot_pi(z);
  std::complex<double> acc{0.0, 0.0};
  while (z.real() < shift_threshold) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  return acc + digamma_asymptotic(z);
}

double bernoulli_polynomial(int p, double x) {
  if (p < 0 || p > BernoulliTable::max_index) throw DomainError("bernoulli_polynomial: order out of range");
  const auto& bt = bernoulli_table();
  // Horner over sum_k C(p,k) B_k x^{p-k}
  double result = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= p; ++k) {
    result = result * x + binom * bt[k];
    binom = binom * (p - k) / (k + 1);
  }
  return result;
}

double periodic_bernoulli(int p, double x) {
  if (p < 1 || p > 8) throw DomainError("periodic_bernoulli: p must be in [1, 8]");
  if (!std::isfinite(x)) throw DomainError("periodic_bernoulli: non-finite argument");
  return bernoulli_polynomial(p, x - std::floor(x));
}

double periodic_bernoulli_max_abs(int p) {
  if (p < 1 || p > 8) throw DomainError("periodic_bernoulli_max_abs: p must be in [1, 8]");
  static const std::array<double, 9> table = [] {
    std::array<double, 9> t{};
    constexpr int samples = 1 << 16;
    for (int q = 1; q <= 8; ++q) {
      double m = 0.0;
      for (int i = 0; i <= samples; ++i) m = std::max(m, std::fabs(bernoulli_polynomial(q, double(i) / samples)));
      // grid spacing 2^-16; |B_p'| = p |B_{p-1}| <= p/2 bounds the miss between samples
      t[q] = m + 0.5 * q / samples;
    }
    return t;
  }();
  return table[p];
}

double log_q_pochhammer_inv(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("log_q_pochhammer_inv: q must lie in (0, 1)");
  const double log_q = std::log(q);
  double sum = 0.0;
  double compensation = 0.0;
  for (long k = 1;; ++k) {
    double qk = std::exp(k * log_q);
    double term = qk / (k * -std::expm1(k * log_q));
    double y = term - compensation;
    double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    if (term < 1e-17 * sum || term < 1e-300) break;
  }
  return sum;
}

}  // namespace lapasym::specfun
