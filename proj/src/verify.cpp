#include "lapasym/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>

#include "lapasym/asymptotic_forms.hpp"
#include "lapasym/decomposition.hpp"
#include "lapasym/errors.hpp"
#include "lapasym/extrapolation.hpp"
#include "lapasym/lattice_sum.hpp"
#include "lapasym/quadrature.hpp"
#include "lapasym/specfun.hpp"

namespace lapasym::verify {

namespace {

constexpr double pi = specfun::pi;

std::string sci(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", v);
  return buffer;
}

void check(SuiteReport& report, const std::string& name, double value, double bound) {
  report.checks.push_back({name, std::fabs(value) <= bound, "|value| = " + sci(std::fabs(value)) + " (bound " + sci(bound) + ")"});
}

void check_in(SuiteReport& report, const std::string& name, double value, double lo, double hi) {
  report.checks.push_back({name, value >= lo && value <= hi,
                           "value = " + sci(value) + " (range [" + sci(lo) + ", " + sci(hi) + "])"});
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

SuiteReport specfun_suite(const SuiteOptions&) {
  SuiteReport r{"specfun", {}};
  const auto& k = specfun::constants();
  check(r, "Cl2(pi) = 0", specfun::clausen_cl2(pi), 1e-12);
  check(r, "Cl2(pi/2) = G", specfun::clausen_cl2(0.5 * pi) - k.catalan_G, 1e-12);

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> real_dist(-30.0, 30.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double x = real_dist(rng);
    if (std::fabs(x - std::round(x)) < 1e-3) x += 0.01;
    double lhs = specfun::digamma(x + 1.0) - specfun::digamma(x) - 1.0 / x;
    worst = std::max(worst, std::fabs(lhs) / (1.0 + std::fabs(specfun::digamma(x + 1.0))));
  }
  check(r, "real digamma recurrence", worst, 1e-12);

  worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::complex<double> z(real_dist(rng), real_dist(rng));
    auto lhs = specfun::digamma(z + 1.0) - specfun::digamma(z) - 1.0 / z;
    worst = std::max(worst, std::abs(lhs) / (1.0 + std::abs(specfun::digamma(z + 1.0))));
  }
  check(r, "complex digamma recurrence", worst, 1e-12);

  const auto& B = specfun::bernoulli_table();
  const bool exact = B.exact(1) == specfun::Rational{-1, 2} && B.exact(2) == specfun::Rational{1, 6} &&
                     B.exact(3) == specfun::Rational{0, 1} && B.exact(4) == specfun::Rational{-1, 30};
  r.checks.push_back({"Bernoulli B1..B4 exact", exact, exact ? "exact" : "mismatch"});

  decomposition::SmoothProfile square{[](double x) { return x * x; },
                                      {[](double x) { return 2.0 * x; }, [](double) { return 2.0; }},
                                      1.0 / 3.0};
  auto em = decomposition::euler_maclaurin(square, 10, 2);
  double direct = 0.0;
  for (int i = 1; i <= 10; ++i) direct += (i / 10.0) * (i / 10.0) / 10.0;
  check(r, "Euler-Maclaurin x^2, N=10, p=2", std::max(std::fabs(em.sum_approx - 0.385), std::fabs(direct - 0.385)), 1e-14);

  check(r, "eta(i) 2 pi^{3/4} / Gamma(1/4) = 1", k.eta_at_i * 2.0 * k.pi_three_quarters / k.gamma_quarter - 1.0, 1e-13);
  check(r, "R5 limit = q-series at e^{-2 pi}",
        asymptotics::rn5_limit() - specfun::log_q_pochhammer_inv(std::exp(-2.0 * pi)), 1e-12);
  return r;
}

SuiteReport identities_suite(const SuiteOptions& options) {
  SuiteReport r{"identities", {}};
  const long max_n = options.max_n > 0 ? options.max_n : 200;
  lattice::SumOptions sum_options;
  sum_options.workers = options.workers;

  double worst = 0.0;
  std::vector<long> ns;
  for (long n = 5; n <= std::min(64L, max_n); ++n) ns.push_back(n);
  if (max_n > 64) ns.push_back(max_n);
  for (long n : ns) {
    const double f = lattice::restricted_sum_f2(n, sum_options).value;
    const auto v = decomposition::rn_direct(n, sum_options);
    const double dn = static_cast<double>(n);
    worst = std::max(worst, std::fabs(f - 4.0 * dn * dn / (pi * pi) * (v.Qn + v.Rn_double)) / std::fabs(f));
  }
  check(r, "restricted f2 sum = (4n^2/pi^2)(Q_n + R_n)", worst, 1e-10);

  worst = 0.0;
  for (long n : {8L, 20L, 100L, max_n}) {
    if (n > max_n || n < 5) continue;
    const auto v = decomposition::rn_direct(n, sum_options);
    worst = std::max(worst, std::fabs(decomposition::rn_via_digamma(n) - v.Rn_double) / v.Rn_double);
  }
  check(r, "digamma route = direct double sum", worst, 1e-10);

  {
    const double x = 3.0, a = 0.01, b = 5.0;
    const double A = std::sqrt(1.0 + 4.0 * a * b);
    const double Bv = (1.0 + A) / (2.0 * a);
    const double C = 2.0 * b / (1.0 + A);
    const std::complex<double> I(0.0, 1.0);
    const double sb = std::sqrt(Bv), sc = std::sqrt(C);
    const std::complex<double> rebuilt = (1.0 / (x + sb) - 1.0 / (x - sb)) / (2.0 * A * sb) +
                                         I / (2.0 * A * sc) * (1.0 / (x + I * sc) - 1.0 / (x - I * sc));
    const double exact = 1.0 / (x * x - a * x * x * x * x + b);
    check(r, "partial fractions at x=3, a=0.01, b=5", std::abs(rebuilt - exact) / exact, 1e-14);
  }

  worst = 0.0;
  for (long k = 1; k <= lattice::GridGeometry(max_n).N; ++k) {
    const auto c = decomposition::cascade(max_n, k);
    worst = std::max({worst, std::fabs(c.beta[3] + c.beta[2]), std::fabs(c.beta[4] - (c.beta[3] - 1.0)),
                      std::fabs(c.gamma[4] - (1.0 - c.beta[3] + c.gamma[3])), std::fabs(c.beta[10] + c.beta[6]),
                      std::fabs(c.gamma[10] - (c.beta[6] * c.beta[6] - c.gamma[6]))});
  }
  check(r, "cascade structural relations", worst, 0.0);

  bool bounds_ok = true;
  std::string detail = "all rows within bounds";
  for (long n = 5; n <= max_n; ++n) {
    try {
      decomposition::abc_rows(n);
    } catch (const InternalConsistencyError& e) {
      bounds_ok = false;
      detail = e.what();
      break;
    }
  }
  r.checks.push_back({"A_k, B_k, C_k bounds for n = 5.." + std::to_string(max_n), bounds_ok, detail});
  return r;
}

SuiteReport asymptotics_suite(const SuiteOptions& options) {
  SuiteReport r{"asymptotics", {}};
  const int n0 = options.n0;
  lattice::SumOptions sum_options;
  sum_options.workers = options.workers;

  struct Plateau {
    const char* lattice;
    double lo, hi;
  };
  for (const Plateau& p : {Plateau{"square", -0.14, -0.10}, Plateau{"triangular", -0.28, -0.22},
                           Plateau{"modified_union_jack", -0.40, -0.34}}) {
    auto spec = lattice::lattice_by_name(p.lattice);
    auto series = extrapolation::error_series(spec, asymptotics::lattice_model(p.lattice), {2500}, sum_options);
    check_in(r, std::string("E_2500 plateau, ") + p.lattice, series.records.front().E, p.lo, p.hi);
  }

  const double d800 = decomposition::assembly_defect(800 + n0, sum_options);
  const double d1600 = decomposition::assembly_defect(1600 + n0, sum_options);
  check(r, "decomposition assembly |D(n)|, n = " + std::to_string(1600 + n0), d1600, 5.0);
  check(r, "decomposition assembly D(1600) - D(800)", d1600 - d800, 0.05);

  std::vector<double> deltas;
  for (long base : {400L, 800L, 1600L}) {
    const long n = base + n0;
    deltas.push_back(oracles::In_beta_f2_quadrature(n, options.tol).value - asymptotics::prop31_expansion(n));
  }
  const double late = deltas[2] - deltas[1];
  const double early = deltas[1] - deltas[0];
  r.checks.push_back({"restricted f2 integral minus expansion settles", std::fabs(late) <= 0.02 && std::fabs(late) <= std::fabs(early) + 1e-9,
                      "Delta = " + sci(deltas[0]) + ", " + sci(deltas[1]) + ", " + sci(deltas[2])});

  const double e100 = decomposition::rn_direct(100, sum_options).R5 - asymptotics::rn5_limit();
  const double e200 = decomposition::rn_direct(200, sum_options).R5 - asymptotics::rn5_limit();
  check(r, "R5(100) - limit", e100, 1e-3);
  check(r, "R5 error ratio 200/100", e200 / e100, 0.35);
  return r;
}

SuiteReport quadrature_suite(const SuiteOptions& options) {
  SuiteReport r{"quadrature", {}};
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> above(1.1, 10.0), inside(0.05, 0.95);
  double worst_log = 0.0, worst_inv = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double a = above(rng);
    const double b = inside(rng);
    auto [j11, j12] = asymptotics::J_closed_forms(a, asymptotics::JRegime::gt1);
    auto [j21, j22] = asymptotics::J_closed_forms(b, asymptotics::JRegime::in01);
    worst_log = std::max({worst_log, std::fabs(oracles::I1_log_minus_cos(a) - j11), std::fabs(oracles::I3_log_plus_cos(b) - j21)});
    worst_inv = std::max({worst_inv, std::fabs(oracles::I2_inv_minus_cos(a) - j12), std::fabs(oracles::I4_inv_plus_cos(b) - j22)});
  }
  check(r, "log integrals vs Clausen closed forms", worst_log, 1e-9);
  check(r, "reciprocal integrals vs closed forms", worst_inv, 1e-10);

  const double G = specfun::constants().catalan_G;
  check(r, "int_0^{pi/4} log cos = -(pi/4) log 2 + G/2",
        oracles::log_cos_integral(0.25 * pi) - (-0.25 * pi * std::log(2.0) + 0.5 * G), 1e-11);

  const double closed = oracles::In_beta_f1(20);
  const double tensor = oracles::in_beta_tensor_quadrature(1, 20, 1e-10).value;
  check(r, "restricted f1 integral, polar vs 2-D at n=20", (closed - tensor) / closed, 1e-6);
  const double polar5 = oracles::In_beta_f2_quadrature(5, options.tol).value;
  const double tensor5 = oracles::in_beta_tensor_quadrature(2, 5, 1e-10).value;
  check(r, "restricted f2 integral, polar vs 2-D at n=5", (polar5 - tensor5) / polar5, 1e-6);
  return r;
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options) {
  if (name == "specfun") return {specfun_suite(options)};
  if (name == "identities") return {identities_suite(options)};
  if (name == "asymptotics") return {asymptotics_suite(options)};
  if (name == "quadrature") return {quadrature_suite(options)};
  if (name == "all")
    return {specfun_suite(options), identities_suite(options), asymptotics_suite(options), quadrature_suite(options)};
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace lapasym::verify
