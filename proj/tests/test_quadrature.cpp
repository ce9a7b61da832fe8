#include <cmath>
#include <random>

#include "doctest.h"
#include "lapasym/asymptotic_forms.hpp"
#include "lapasym/errors.hpp"
#include "lapasym/lattice_sum.hpp"
#include "lapasym/quadrature.hpp"
#include "reference.hpp"

using namespace lapasym;
using namespace lapasym::oracles;
using specfun::pi;

TEST_CASE("integrate_1d basics") {
  auto q = integrate_1d([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(std::fabs(q.value - 1.0 / 3.0) < 1e-15);
  CHECK(q.abs_error_estimate >= 0.0);
  CHECK(q.evaluations >= 15);

  auto s = integrate_1d([](double x) { return std::sin(x); }, 0.0, pi);
  CHECK(std::fabs(s.value - 2.0) < 1e-13);

  // mild endpoint log singularity: int_0^1 log x = -1
  auto l = integrate_1d([](double x) { return std::log(x); }, 0.0, 1.0, 1e-12);
  CHECK(std::fabs(l.value + 1.0) < 1e-11);

  CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, 1.0, 0.0), DomainError);
}

TEST_CASE("log cos integral over [0, pi/4] gives the Catalan combination") {
  const double expected = -0.25 * pi * std::log(2.0) + 0.5 * ref::catalan;
  CHECK(std::fabs(log_cos_integral(0.25 * pi) - expected) < 1e-12);
  // general angle: int_0^t log cos = -t log 2 + Cl2(pi - 2t)/2
  for (double t : {0.1, 0.5, 1.0, 1.4}) {
    const double closed = -t * std::log(2.0) + 0.5 * specfun::clausen_cl2(pi - 2.0 * t);
    CHECK(std::fabs(log_cos_integral(t) - closed) < 1e-11);
  }
}

TEST_CASE("building blocks at a = 2") {
  CHECK(std::fabs(I2_inv_minus_cos(2.0) - 2.0 * pi / (3.0 * std::sqrt(3.0))) < 1e-12);
  // int_0^{pi/2} dtheta / (cos + 1) = tan(pi/4) = 1
  CHECK(std::fabs(I4_inv_plus_cos(1.0) - 1.0) < 1e-12);
  CHECK_THROWS_AS(I1_log_minus_cos(1.0), DomainError);
  CHECK_THROWS_AS(I4_inv_plus_cos(0.0), DomainError);
}

TEST_CASE("eta_sq identity on a 1000-point grid") {
  for (int i = 0; i <= 999; ++i) {
    const double theta = PolarReduction::theta_max * i / 999.0;
    const double c2 = std::cos(theta) * std::cos(theta);
    CHECK(std::fabs(PolarReduction::eta_sq(theta) - (2.0 * c2 * c2 - 2.0 * c2 + 1.0)) <= 1e-15);
  }
}

TEST_CASE("polar bounds") {
  const PolarReduction polar(40);
  CHECK(polar.r_inner(0.0) == doctest::Approx(pi / 40.0));
  CHECK(polar.r_outer(0.0) == doctest::Approx(polar.beta_n));
  CHECK(polar.r_outer(PolarReduction::theta_max) == doctest::Approx(polar.beta_n * std::sqrt(2.0)));
  CHECK(polar.beta_n == doctest::Approx(0.5 * pi * (1.0 + 2.0 / 40.0)));
}

TEST_CASE("restricted f1 integral: closed form") {
  // n = 8, n0 = 0: beta_8 = (pi/2)(1 + 2/8)
  const double beta8 = 0.5 * pi * 1.25;
  const double delta = 2.0 * pi / 8.0;
  CHECK(In_beta_f1(8) == doctest::Approx(8.0 * pi / (delta * delta) * std::log(8.0 * beta8 / pi)).epsilon(1e-15));

  // I - [(2/pi) n^2 log n - (log 4/pi) n^2 + (2(2-n0)/pi) n] -> -(2-n0)^2/pi with O(1/n) error
  for (long n : {100L, 101L, 102L, 103L, 1000L, 1001L, 1002L, 1003L}) {
    const double dn = double(n);
    const int n0 = int(n % 4);
    const double head = (2.0 / pi) * dn * dn * std::log(dn) - std::log(4.0) / pi * dn * dn + 2.0 * (2 - n0) / pi * dn;
    const double remainder = In_beta_f1(n) - head;
    const double limit = -double((2 - n0) * (2 - n0)) / pi;
    CHECK(std::fabs(remainder - limit) <= 20.0 / dn);
    if (n0 != 0) CHECK(std::fabs(remainder) <= 1.0);
  }
}

TEST_CASE("restricted f1 integral vs 2-D tensor quadrature") {
  for (long n : {8L, 20L}) {
    const auto tensor = in_beta_tensor_quadrature(1, n, 1e-10);
    CHECK(std::fabs(tensor.value / In_beta_f1(n) - 1.0) <= 1e-6);
  }
}

TEST_CASE("restricted f2 integral") {
  SUBCASE("n = 5 against the tensor oracle and the frozen reference") {
    const auto polar = In_beta_f2_quadrature(5);
    const auto tensor = in_beta_tensor_quadrature(2, 5, 1e-10);
    CHECK(std::fabs(polar.value / tensor.value - 1.0) <= 1e-6);
    CHECK(std::fabs(polar.value / ref::in_beta_f2_5 - 1.0) <= 1e-12);
    CHECK(polar.abs_error_estimate >= 0.0);
  }
  SUBCASE("n = 12 against the tensor oracle") {
    const auto polar = In_beta_f2_quadrature(12);
    const auto tensor = in_beta_tensor_quadrature(2, 12, 1e-10);
    CHECK(std::fabs(polar.value / tensor.value - 1.0) <= 1e-6);
  }
  SUBCASE("n = 400 frozen") {
    CHECK(std::fabs(In_beta_f2_quadrature(400).value / ref::in_beta_f2_400 - 1.0) <= 1e-12);
  }
  SUBCASE("integrand at theta = 0") {
    // I_f2 - I_f1 = (16/Delta^2) int h; at theta = 0 the integrand is log(12 - pi^2/n^2) - log(12 - beta_n^2)
    const long n = 37;
    const PolarReduction polar(n);
    const double expected = std::log(12.0 - pi * pi / double(n * n)) - std::log(12.0 - polar.beta_n * polar.beta_n);
    const double eta = std::sqrt(PolarReduction::eta_sq(0.0));
    const double inner = pi * eta / double(n), outer = polar.beta_n * eta;
    CHECK(std::log(12.0 - inner * inner) - std::log(12.0 - outer * outer) == doctest::Approx(expected).epsilon(1e-15));
  }
  SUBCASE("n = 1000 against the three-term expansion") {
    const double delta = In_beta_f2_quadrature(1000).value - asymptotics::prop31_expansion(1000);
    MESSAGE("I(f2) - expansion at n = 1000: " << delta);
    // n = 1000 has n0 = 0; the O(1) remainder converges to about -1.08 there
    CHECK(std::fabs(delta - (-1.0817)) <= 0.5);
  }
  SUBCASE("n = 1002 within +-0.5 of the expansion") {
    const double delta = In_beta_f2_quadrature(1002).value - asymptotics::prop31_expansion(1002);
    CHECK(std::fabs(delta) <= 0.5);
  }
  CHECK_THROWS_AS(In_beta_f2_quadrature(4), DomainError);
}

TEST_CASE("J integrals") {
  const double nu = ref::nu;
  const double u = 0.5 * (nu + 1.0);  // 2u - 1 = nu, 1 - 1/u = (nu-1)/(nu+1)
  const auto j = J_integrals(u);
  CHECK(std::fabs(j.J_n1 - asymptotics::J11(nu)) <= 1e-9);
  CHECK(std::fabs(j.J_n2 - asymptotics::J21((nu - 1.0) / (nu + 1.0))) <= 1e-9);

  double previous = 1.0;
  for (double big : {1e2, 1e4, 1e6}) {
    const auto jb = J_integrals(big);
    const double gap = std::fabs(jb.J_n1 - 0.5 * pi * std::log(2.0 * big - 1.0));
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous < 1e-6);
  CHECK_THROWS_AS(J_integrals(1.0), DomainError);
}

TEST_CASE("closed forms vs quadrature on random arguments") {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> gt1(1.1, 10.0), in01(0.05, 0.95);
  for (int i = 0; i < 50; ++i) {
    const double a = gt1(rng);
    CHECK(std::fabs(I1_log_minus_cos(a) - asymptotics::J11(a)) <= 1e-9);
    CHECK(std::fabs(I2_inv_minus_cos(a) - asymptotics::J12(a)) <= 1e-10);
    const auto pair = asymptotics::J_closed_forms(a, asymptotics::JRegime::gt1);
    CHECK(pair.first == asymptotics::J11(a));
    CHECK(pair.second == asymptotics::J12(a));
  }
  for (int i = 0; i < 50; ++i) {
    const double a = in01(rng);
    CHECK(std::fabs(I3_log_plus_cos(a) - asymptotics::J21(a)) <= 1e-9);
    CHECK(std::fabs(I4_inv_plus_cos(a) - asymptotics::J22(a)) <= 1e-10);
    const auto pair = asymptotics::J_closed_forms(a, asymptotics::JRegime::in01);
    CHECK(pair.first == asymptotics::J21(a));
    CHECK(pair.second == asymptotics::J22(a));
  }
}

TEST_CASE("subdivision limit raises ConvergenceError with the partial result") {
  QuadratureOptions tight;
  tight.abs_tol = 1e-300;
  tight.rel_tol = 0.0;
  tight.max_intervals = 4;
  try {
    integrate_1d([](double x) { return std::sqrt(x); }, 0.0, 1.0, tight);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::fabs(e.partial_value() - 2.0 / 3.0) < 1e-4);
    CHECK(e.error_estimate() > 0.0);
  }
  QuadratureOptions shallow;
  shallow.abs_tol = 1e-300;
  shallow.rel_tol = 0.0;
  shallow.max_depth = 3;
  CHECK_THROWS_AS(integrate_1d([](double x) { return std::sqrt(x); }, 0.0, 1.0, shallow), ConvergenceError);
}
