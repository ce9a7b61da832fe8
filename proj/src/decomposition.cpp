#include "lapasym/decomposition.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "lapasym/errors.hpp"
#include "lapasym/quadrature.hpp"
#include "lapasym/specfun.hpp"

namespace lapasym::decomposition {

namespace {

constexpr double pi = specfun::pi;
const double a_scale = pi / (4.0 * std::sqrt(3.0));

void require_n(long n, long minimum, const char* what) {
  if (n < minimum) throw DomainError(std::string(what) + ": need n >= " + std::to_string(minimum));
}

// pi^2 / (3 n^2), the quartic coefficient of the restricted f2 denominators
double quartic_coefficient(long n) {
  const double dn = static_cast<double>(n);
  return pi * pi / (3.0 * dn * dn);
}

[[noreturn]] void bound_violation(long n, long k, const char* which) {
  throw InternalConsistencyError("abc_rows: bound on " + std::string(which) + " violated at n=" + std::to_string(n) +
                                 ", k=" + std::to_string(k));
}

}  // namespace

double inv_N0(long n) {
  lattice::GridGeometry grid(n);
  if (grid.n0 == 0) return 0.0;
  return static_cast<double>(grid.n0) / (4.0 * static_cast<double>(grid.N));
}

std::vector<ABCRow> abc_rows(long n) {
  require_n(n, 4, "abc_rows");
  lattice::GridGeometry grid(n);
  const double dn = static_cast<double>(n);
  const double dN = static_cast<double>(grid.N);
  const double c = quartic_coefficient(n);
  const double b_scale = 3.0 * dn * dn / (2.0 * pi * pi);
  const double inv = inv_N0(n);
  std::vector<ABCRow> rows;
  rows.reserve(static_cast<std::size_t>(grid.N));
  for (long k = 1; k <= grid.N; ++k) {
    const double dk = static_cast<double>(k);
    const double x = c * dk * dk;
    ABCRow row;
    row.k = k;
    row.A = std::sqrt(1.0 + 4.0 * x * (1.0 - x));
    row.B = b_scale * (1.0 + row.A);
    row.C = 2.0 * dk * dk * (1.0 - x) / (1.0 + row.A);
    row.a_k = a_scale * dk / dN;
    const double a2 = row.a_k * row.a_k;
    row.calA = std::sqrt(1.0 + 4.0 * a2 * (1.0 - a2));
    row.inv_N0 = inv;

    if (!(row.A > 1.0 && row.A < 1.3)) bound_violation(n, k, "A_k");
    if (!(row.B > 3.0 * dn * dn / (pi * pi) && row.B < 3.5 * dn * dn / (pi * pi))) bound_violation(n, k, "B_k");
    if (!(row.C > 0.69 * dk * dk && row.C < dk * dk)) bound_violation(n, k, "C_k");
    const double root_B = std::sqrt(row.B);
    if (!(root_B - dN > 0.3 * dn && root_B + dN < 0.85 * dn)) bound_violation(n, k, "sqrt(B_k) +- N");
    rows.push_back(row);
  }
  return rows;
}

CascadeRow cascade_profile(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("cascade_profile: need 0 <= x <= 1");
  CascadeRow r;
  r.x = x;
  const double a = a_scale * x;
  const double a2 = a * a;
  const double A = std::sqrt(1.0 + 4.0 * a2 * (1.0 - a2));
  r.a = a;
  r.calA = A;
  auto& al = r.alpha;
  auto& be = r.beta;
  auto& ga = r.gamma;

  const double m = 2.0 * a2 - 1.0;  // 2a^2 - 1
  const double q = 8.0 * a2 * a2 * a2 + 4.0 * a2 * a2 + 10.0 * a2 - 3.0;
  const double s = (2.0 * a2 - 3.0) * (12.0 * a2 * a2 - 1.0);

  al[1] = 1.0 / A;
  be[1] = -4.0 * a2 * m / (A * A);
  ga[1] = 2.0 * a2 * q / (A * A * A * A);

  al[2] = std::sqrt(1.0 + A);
  be[2] = 2.0 * a2 * m / (A * (1.0 + A));
  ga[2] = a2 / (A * A * (1.0 + A)) * (s / A - 2.0 * a2 * m * m / (1.0 + A));

  al[3] = 1.0 / std::sqrt(1.0 + A);
  be[3] = -be[2];
  ga[3] = a2 / (A * A * (1.0 + A)) * (6.0 * a2 * m * m / (1.0 + A) - s / A);

  al[4] = pi / (2.0 * std::sqrt(6.0)) * al[3];
  be[4] = be[3] - 1.0;
  ga[4] = 1.0 - be[3] + ga[3];

  const double one_minus_sq = 1.0 - al[4] * al[4];
  al[5] = (1.0 + al[4]) / (1.0 - al[4]);
  be[5] = 2.0 * al[4] * be[4] / one_minus_sq;
  ga[5] = 2.0 * al[4] * ga[4] / one_minus_sq +
          2.0 * al[4] * al[4] * al[4] * be[4] * be[4] / (one_minus_sq * one_minus_sq);

  const double b2 = 1.0 - a2;
  al[6] = std::sqrt(2.0) * std::sqrt(b2) / std::sqrt(1.0 + A) * x;
  be[6] = be[3] + a2 / b2;
  ga[6] = ga[3] + be[3] * a2 / b2 + a2 * (2.0 * a2 - 3.0) / (2.0 * b2 * b2);

  const double t2 = al[6] * al[6];
  al[7] = al[6] > 0.0 ? std::atan(al[6]) / al[6] : 1.0;
  be[7] = -be[6];
  ga[7] = be[6] * be[6] - ga[6];
  r.beta7_prime = be[6] / (1.0 + t2);
  r.gamma7_prime = ga[6] / (1.0 + t2) - be[6] * be[6] * (1.0 + 2.0 * t2) / ((1.0 + t2) * (1.0 + t2));

  const double log5 = std::log(al[5]);
  al[8] = al[1] * al[4] * log5;
  be[8] = al[1] * al[4] * ((be[1] + be[4]) * log5 + be[5]);
  ga[8] = al[1] * al[4] * ((be[1] * be[4] + ga[1] + ga[4]) * log5 + (be[1] + be[4]) * be[5] + ga[5]);

  al[9] = al[1] * al[7];
  be[9] = al[1] * (al[7] * (be[1] + be[7]) + r.beta7_prime);
  ga[9] = al[1] * ((be[1] * be[7] + ga[1] + ga[7]) * al[7] + be[1] * r.beta7_prime + r.gamma7_prime);

  al[10] = std::sqrt(1.0 + A) / (std::sqrt(2.0) * std::sqrt(b2));
  be[10] = -be[6];
  ga[10] = be[6] * be[6] - ga[6];

  al[11] = al[1] * al[10];
  be[11] = be[1] + be[10];
  ga[11] = be[1] * be[10] + ga[1] + ga[10];
  return r;
}

CascadeRow cascade(long n, long k) {
  require_n(n, 4, "cascade");
  lattice::GridGeometry grid(n);
  if (k < 1 || k > grid.N) throw DomainError("cascade: need 1 <= k <= N");
  CascadeRow row = cascade_profile(static_cast<double>(k) / static_cast<double>(grid.N));
  row.k = k;
  return row;
}

double mu_profile(double x) {
  const double u = pi * pi / 48.0 * x * x;
  const double inner = std::sqrt(1.0 + 4.0 * u * (1.0 - u));
  return std::sqrt(1.0 + inner) / (std::sqrt(2.0) * std::sqrt(1.0 - u) * inner);
}

double mu_taylor_head(double x) {
  const double x2 = x * x;
  const double p2 = pi * pi;
  return 1.0 - p2 / 48.0 * x2 + 11.0 * p2 * p2 / 4608.0 * x2 * x2 - 41.0 * p2 * p2 * p2 / 221184.0 * x2 * x2 * x2;
}

double mu1_profile(double x) {
  if (std::fabs(x) < 1e-3) {
    const double x2 = x * x;
    const double p2 = pi * pi;
    return x * (-p2 / 48.0 + 11.0 * p2 * p2 / 4608.0 * x2 - 41.0 * p2 * p2 * p2 / 221184.0 * x2 * x2);
  }
  return (mu_profile(x) - 1.0) / x;
}

RQValues rn_direct(long n, const lattice::SumOptions& options) {
  require_n(n, 4, "rn_direct");
  lattice::GridGeometry grid(n);
  RQValues v;
  v.n = n;
  v.N = grid.N;
  v.n0 = grid.n0;
  const long N = grid.N;
  const double dN = static_cast<double>(N);
  const double c = quartic_coefficient(n);
  const auto rows = abc_rows(n);

  lattice::CompensatedSum r1, r2, r3, r4, r5, q;
  for (const auto& row : rows) {
    const double dk = static_cast<double>(row.k);
    const double ratio = dN / std::sqrt(row.B);
    r1.add(ratio / (dN * row.A) * std::log((1.0 + ratio) / (1.0 - ratio)));
    const double t = std::sqrt(row.C) / dN;
    r2.add(std::atan(t) / t / (dN * row.A));
    const double d3 = dk * dk + dN * dN - c * (dk * dk * dk * dk + dN * dN * dN * dN);
    r3.add(1.0 / d3);
    const double w = 1.0 / (row.A * std::sqrt(row.C));
    r4.add(w);
    const double term5 = w / std::expm1(2.0 * pi * std::sqrt(row.C));
    if (term5 >= 1e-18 * std::fabs(r5.value())) r5.add(term5);
    q.add(1.0 / (dk * dk - c * dk * dk * dk * dk));
  }
  v.R1 = r1.value();
  v.R2 = r2.value();
  v.R3 = r3.value();
  v.R4 = r4.value();
  v.R5 = r5.value();
  v.Qn = q.value();

  auto total = lattice::reduce_rows(N, lattice::resolve_workers(options.workers), options.reverse_order, [&](long row) {
    lattice::CompensatedSum acc;
    const double dj = static_cast<double>(row + 1);
    const double j2 = dj * dj;
    for (long kk = 1; kk <= N; ++kk) {
      const double dk = static_cast<double>(options.reverse_order ? N + 1 - kk : kk);
      const double k2 = dk * dk;
      const double denom = j2 + k2 - c * (j2 * j2 + k2 * k2);
      if (!(denom > 0.0)) throw SingularityError("rn_direct: vanishing denominator", dj, dk);
      acc.add(1.0 / denom);
    }
    return acc;
  });
  v.Rn_double = total.value();
  return v;
}

double rn_via_digamma(long n) {
  require_n(n, 5, "rn_via_digamma");
  lattice::GridGeometry grid(n);
  const double dN = static_cast<double>(grid.N);
  const std::complex<double> I(0.0, 1.0);
  lattice::CompensatedSum real_part, imag_part;
  for (const auto& row : abc_rows(n)) {
    const double sb = std::sqrt(row.B);
    const double first = specfun::digamma(sb + dN) - specfun::digamma(sb - dN) + 1.0 / (sb + dN) - 1.0 / sb;
    real_part.add(first / (2.0 * row.A * sb));

    const double sc = std::sqrt(row.C);
    const std::complex<double> z(dN, sc);
    const std::complex<double> bracket = specfun::digamma(z) - specfun::digamma(std::conj(z)) -
                                         2.0 * I * sc / (row.C + dN * dN) - 1.0 / (I * sc) +
                                         specfun::pi_cot_pi(I * sc);
    if (std::fabs(bracket.real()) > 1e-12 * std::max(1.0, std::abs(bracket)))
      throw InternalConsistencyError("rn_via_digamma: conjugate-pair bracket has a real part at k=" +
                                     std::to_string(row.k));
    // i * bracket with bracket purely imaginary
    imag_part.add(-bracket.imag() / (2.0 * row.A * sc));
  }
  return real_part.value() + imag_part.value();
}

double assembly_defect(long n, const lattice::SumOptions& options) {
  const RQValues v = rn_direct(n, options);
  const double dn = static_cast<double>(n);
  const double bracket = v.R1 - 2.0 * v.R2 + v.R3 + pi * v.R4 + 2.0 * pi * v.R5 + v.Qn;
  return 2.0 * dn * dn / (pi * pi) * bracket - lattice::restricted_sum_f2(n, options).value;
}

namespace {

// m-th central difference of g at x with step h
double central_difference(const std::function<double(double)>& g, int m, double x, double h) {
  double acc = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= m; ++i) {
    acc += ((i % 2 == 0) ? 1.0 : -1.0) * binom * g(x + (0.5 * m - i) * h);
    binom = binom * (m - i) / (i + 1);
  }
  return acc / std::pow(h, m);
}

struct Derivative {
  double value;
  double error;
};

}  // namespace

EulerMaclaurinResult euler_maclaurin(const SmoothProfile& profile, long N, int p) {
  if (p < 1 || p > 6) throw DomainError("euler_maclaurin: need 1 <= p <= 6");
  if (N < 1) throw DomainError("euler_maclaurin: need N >= 1");
  if (!profile.g) throw DomainError("euler_maclaurin: missing function");
  const auto& B = specfun::bernoulli_table();
  EulerMaclaurinResult result;
  const bool analytic = static_cast<int>(profile.derivatives.size()) >= p;
  result.finite_differences = !analytic;
  const double h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (p + 2));

  auto derivative = [&](int order, double x) -> Derivative {
    if (order == 0) return {profile.g(x), 0.0};
    if (analytic) return {profile.derivatives[order - 1](x), 0.0};
    double fine = central_difference(profile.g, order, x, h);
    double coarse = central_difference(profile.g, order, x, 2.0 * h);
    return {fine, std::fabs(fine - coarse)};
  };

  result.integral = profile.integral ? *profile.integral : oracles::integrate_1d(profile.g, 0.0, 1.0, 1e-14).value;
  const double dN = static_cast<double>(N);
  double total = result.integral + (profile.g(1.0) - profile.g(0.0)) / dN;
  double differencing_error = 0.0;
  double factorial = 1.0;
  for (int l = 1; l <= p; ++l) {
    factorial *= l;
    if (B[l] == 0.0) continue;
    const double weight = B[l] / (factorial * std::pow(dN, l));
    auto hi = derivative(l - 1, 1.0);
    auto lo = derivative(l - 1, 0.0);
    total += weight * (hi.value - lo.value);
    differencing_error += std::fabs(weight) * (hi.error + lo.error);
  }
  result.sum_approx = total;

  // integral of |g^(p)| by composite Gauss-Legendre on 64 panels
  static const double gl_nodes[3] = {-0.774596669241483377, 0.0, 0.774596669241483377};
  static const double gl_weights[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  const int panels = 64;
  double abs_integral = 0.0;
  double abs_integral_error = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double centre = (i + 0.5) / panels;
    for (int j = 0; j < 3; ++j) {
      auto d = derivative(p, centre + 0.5 / panels * gl_nodes[j]);
      abs_integral += 0.5 / panels * gl_weights[j] * std::fabs(d.value);
      abs_integral_error += 0.5 / panels * gl_weights[j] * d.error;
    }
  }
  result.remainder_bound = specfun::periodic_bernoulli_max_abs(p) * (abs_integral + abs_integral_error) /
                               (std::pow(dN, p) * factorial) +
                           differencing_error;
  return result;
}

ProfileComparison rn1_rn2_profiles(long n) {
  require_n(n, 8, "rn1_rn2_profiles");
  lattice::GridGeometry grid(n);
  const double dN = static_cast<double>(grid.N);
  ProfileComparison out;
  out.inv_N0 = inv_N0(n);
  const RQValues direct = rn_direct(n);
  out.R1_direct = direct.R1;
  out.R2_direct = direct.R2;
  lattice::CompensatedSum r1, r2;
  const double e = out.inv_N0;
  for (long k = 1; k <= grid.N; ++k) {
    const CascadeRow row = cascade(n, k);
    ProfileSample sample{row.x, {row.alpha[8], row.beta[8], row.gamma[8]}, {row.alpha[9], row.beta[9], row.gamma[9]}};
    r1.add((sample.mu1[0] + e * sample.mu1[1] + e * e * sample.mu1[2]) / dN);
    r2.add((sample.mu2[0] + e * sample.mu2[1] + e * e * sample.mu2[2]) / dN);
    out.samples.push_back(sample);
  }
  out.R1_profile = r1.value();
  out.R2_profile = r2.value();
  return out;
}

}  // namespace lapasym::decomposition
