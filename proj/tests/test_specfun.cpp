#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "lapasym/errors.hpp"
#include "lapasym/specfun.hpp"
#include "reference.hpp"

using namespace lapasym;
using specfun::pi;

TEST_CASE("Bernoulli table holds exact rationals") {
  const auto& B = specfun::bernoulli_table();
  CHECK(B.exact(0) == specfun::Rational{1, 1});
  CHECK(B.exact(1) == specfun::Rational{-1, 2});
  CHECK(B.exact(2) == specfun::Rational{1, 6});
  CHECK(B.exact(3) == specfun::Rational{0, 1});
  CHECK(B.exact(4) == specfun::Rational{-1, 30});
  CHECK(B.exact(12) == specfun::Rational{-691, 2730});
  CHECK(B.exact(30) == specfun::Rational{8615841276005LL, 14322});
  for (int i = 3; i <= specfun::BernoulliTable::max_index; i += 2) CHECK(B.exact(i).num == 0);
  CHECK(B[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
}

TEST_CASE("fundamental constants") {
  const auto& k = specfun::constants();
  CHECK(k.catalan_G > 0.9159);
  CHECK(k.catalan_G < 0.9160);
  CHECK(k.euler_gamma > 0.5772);
  CHECK(k.euler_gamma < 0.5773);
  CHECK(std::fabs(k.catalan_G - ref::catalan) < 1e-16);
  CHECK(std::fabs(k.gamma_quarter - ref::gamma_quarter) < 4e-16);
  CHECK(std::fabs(k.gamma_third - ref::gamma_third) < 4e-16);
  CHECK(std::fabs(k.eta_at_i - k.gamma_quarter / (2.0 * k.pi_three_quarters)) / k.eta_at_i < 1e-14);
  CHECK(k.pi_sq == pi * pi);
}

TEST_CASE("Clausen function values") {
  CHECK(specfun::clausen_cl2(0.0) == 0.0);
  CHECK(std::fabs(specfun::clausen_cl2(pi)) < 1e-15);
  CHECK(std::fabs(specfun::clausen_cl2(0.5 * pi) - ref::catalan) < 1e-15);
  CHECK(std::fabs(specfun::clausen_cl2(1.0) - ref::cl2_1) < 1e-14);
  CHECK(std::fabs(specfun::clausen_cl2(0.3) - ref::cl2_0p3) < 1e-14);
  CHECK(std::fabs(specfun::clausen_cl2(2.5) - ref::cl2_2p5) < 1e-14);
  CHECK(std::fabs(specfun::clausen_cl2(3.0) - ref::cl2_3) < 1e-14);
  CHECK(std::fabs(specfun::clausen_cl2(-1.0) + ref::cl2_1) < 1e-14);
  CHECK(std::fabs(specfun::clausen_cl2(7.0) - ref::cl2_7) < 1e-13);
  CHECK_THROWS_AS(specfun::clausen_cl2(NAN), DomainError);
  CHECK_THROWS_AS(specfun::clausen_cl2(INFINITY), DomainError);
}

TEST_CASE("Catalan oracle: alternating series with averaged partial sums") {
  // sum (-1)^m / (2m+1)^2; the mean of consecutive partial sums cancels the
  // leading tail term and leaves an O(M^-3) error.
  const int M = 200000;
  long double s = 0.0L;
  for (int m = M; m >= 0; --m) s += ((m % 2) ? -1.0L : 1.0L) / ((2.0L * m + 1.0L) * (2.0L * m + 1.0L));
  const long double last = ((M % 2) ? -1.0L : 1.0L) / ((2.0L * M + 1.0L) * (2.0L * M + 1.0L));
  const double averaged = static_cast<double>(s - 0.5L * last);
  CHECK(std::fabs(specfun::clausen_cl2(0.5 * pi) - averaged) < 1e-15);
}

TEST_CASE("Clausen duplication, oddness and periodicity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(1e-6, pi - 1e-6);
  for (int i = 0; i < 200; ++i) {
    const double t = dist(rng);
    const double lhs = specfun::clausen_cl2(2.0 * t);
    const double rhs = 2.0 * specfun::clausen_cl2(t) - 2.0 * specfun::clausen_cl2(pi - t);
    CHECK(std::fabs(lhs - rhs) < 1e-12);
    CHECK(std::fabs(specfun::clausen_cl2(-t) + specfun::clausen_cl2(t)) < 1e-15);
    CHECK(std::fabs(specfun::clausen_cl2(t + 2.0 * pi) - specfun::clausen_cl2(t)) < 1e-13);
  }
}

TEST_CASE("Clausen derivative is -log|2 sin(t/2)|") {
  for (double t : {0.05, 0.4, 1.0, 2.0, 2.09, 2.1, 3.0}) {
    const double h = 1e-5;
    const double d = (specfun::clausen_cl2(t + h) - specfun::clausen_cl2(t - h)) / (2.0 * h);
    CHECK(std::fabs(d + std::log(2.0 * std::sin(0.5 * t))) < 1e-7);
  }
}

TEST_CASE("Clausen: branch seam at 2 pi / 3 is continuous") {
  const double seam = 2.0 * pi / 3.0;
  CHECK(std::fabs(specfun::clausen_cl2(std::nextafter(seam, 0.0)) - specfun::clausen_cl2(std::nextafter(seam, 4.0))) < 1e-14);
}

TEST_CASE("real digamma") {
  const double g = ref::euler_gamma;
  CHECK(std::fabs(specfun::digamma(1.0) + g) < 1e-15);
  CHECK(std::fabs(specfun::digamma(2.0) - (1.0 - g)) < 1e-15);
  CHECK(std::fabs(specfun::digamma(4.5) - specfun::digamma(1.5) - (1.0 / 1.5 + 1.0 / 2.5 + 1.0 / 3.5)) < 1e-14);
  CHECK(std::fabs(specfun::digamma(0.001) - ref::digamma_0p001) < 1e-12);
  CHECK(std::fabs(specfun::digamma(-2.5) - ref::digamma_m2p5) < 1e-13);
  CHECK(std::fabs(specfun::digamma(12345.678) - ref::digamma_12345p678) < 1e-13);
  CHECK(std::fabs(specfun::digamma(1e8) - (std::log(1e8) - 0.5e-8)) < 1e-12);
  CHECK_THROWS_AS(specfun::digamma(0.0), PoleError);
  CHECK_THROWS_AS(specfun::digamma(-3.0), PoleError);
}

TEST_CASE("harmonic-number oracle for digamma at integers") {
  // psi(n) = H_{n-1} - gamma
  double H = 0.0;
  for (int n = 1; n <= 60; ++n) {
    CHECK(std::fabs(specfun::digamma(static_cast<double>(n)) - (H - ref::euler_gamma)) < 1e-13);
    H += 1.0 / n;
  }
}

TEST_CASE("complex digamma") {
  using C = std::complex<double>;
  const auto two = specfun::digamma(C(2.0, 0.0));
  CHECK(std::fabs(two.real() - (1.0 - ref::euler_gamma)) < 1e-15);
  CHECK(two.imag() == 0.0);

  const auto z = specfun::digamma(C(3.0, 2.0));
  CHECK(std::fabs(z.real() - ref::digamma_3p2i_re) < 1e-14);
  CHECK(std::fabs(z.imag() - ref::digamma_3p2i_im) < 1e-14);
  CHECK(std::abs(specfun::digamma(C(3.0, -2.0)) - std::conj(z)) < 1e-13);

  const auto w = specfun::digamma(C(0.5, 7.0));
  CHECK(std::fabs(w.real() - ref::digamma_0p5p7i_re) < 1e-14);
  CHECK(std::fabs(w.imag() - ref::digamma_0p5p7i_im) < 1e-14);

  // psi(1+iy) - psi(1-iy) = 1/(iy) - pi cot(pi i y), purely imaginary
  const double y = 1.0;
  const C lhs = specfun::digamma(C(1.0, y)) - specfun::digamma(C(1.0, -y));
  const C rhs = 1.0 / C(0.0, y) - specfun::pi_cot_pi(C(0.0, y));
  CHECK(std::abs(lhs - rhs) < 1e-12);
  CHECK(std::fabs(lhs.real()) < 1e-15);

  CHECK_THROWS_AS(specfun::digamma(C(-2.0, 0.0)), PoleError);
  const auto left = specfun::digamma(C(-2.5, 0.0));
  CHECK(std::fabs(left.real() - ref::digamma_m2p5) < 1e-12);
}

TEST_CASE("digamma recurrence on random points") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> real_dist(0.1, 100.0);
  std::uniform_real_distribution<double> radius(1.0, 100.0), angle(-0.5 * pi, 0.5 * pi);
  for (int i = 0; i < 1000; ++i) {
    const double x = real_dist(rng);
    const double res = specfun::digamma(x + 1.0) - specfun::digamma(x) - 1.0 / x;
    CHECK(std::fabs(res) <= 1e-12 * std::max(1.0, std::fabs(specfun::digamma(x + 1.0))));
    const std::complex<double> z = std::polar(radius(rng), angle(rng));
    const auto cres = specfun::digamma(z + 1.0) - specfun::digamma(z) - 1.0 / z;
    CHECK(std::abs(cres) <= 1e-12 * std::max(1.0, std::abs(specfun::digamma(z + 1.0))));
  }
}

TEST_CASE("finite sum identity sum_{j<=N} 1/(j+a) = psi(N+1+a) - psi(1+a)") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> Ndist(1, 50);
  std::uniform_real_distribution<double> adist(0.1, 5.0);
  for (int i = 0; i < 100; ++i) {
    const int N = Ndist(rng);
    const double a = adist(rng);
    double direct = 0.0;
    for (int j = 1; j <= N; ++j) direct += 1.0 / (j + a);
    CHECK(std::fabs(specfun::digamma(N + 1.0 + a) - specfun::digamma(1.0 + a) - direct) < 1e-11);
  }
}

TEST_CASE("periodic Bernoulli polynomials") {
  CHECK(specfun::periodic_bernoulli(2, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(specfun::periodic_bernoulli(2, 0.5) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
  CHECK(specfun::periodic_bernoulli(1, 1.25) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(specfun::periodic_bernoulli(3, -0.75) == doctest::Approx(specfun::bernoulli_polynomial(3, 0.25)).epsilon(1e-14));
  CHECK_THROWS_AS(specfun::periodic_bernoulli(0, 0.1), DomainError);
  CHECK_THROWS_AS(specfun::periodic_bernoulli(9, 0.1), DomainError);
  // max |B_p| on [0,1): B_2 -> 1/6, B_4 -> 1/30
  CHECK(specfun::periodic_bernoulli_max_abs(2) >= 1.0 / 6.0);
  // the table adds a sampling margin of p / 2^17
  CHECK(specfun::periodic_bernoulli_max_abs(2) < 1.0 / 6.0 + 2.0 / 65536.0);
  CHECK(specfun::periodic_bernoulli_max_abs(4) >= 1.0 / 30.0);
}

TEST_CASE("Bernoulli polynomial derivative identity B_p' = p B_{p-1}") {
  for (int p = 1; p <= 8; ++p) {
    for (double x : {0.1, 0.37, 0.8}) {
      const double h = 1e-5;
      const double d = (specfun::bernoulli_polynomial(p, x + h) - specfun::bernoulli_polynomial(p, x - h)) / (2.0 * h);
      CHECK(std::fabs(d - p * specfun::bernoulli_polynomial(p - 1, x)) < 1e-7);
    }
  }
}

TEST_CASE("log q-Pochhammer") {
  CHECK(specfun::log_q_pochhammer_inv(1e-300) < 1e-299);
  CHECK(std::fabs(specfun::log_q_pochhammer_inv(std::exp(-2.0 * pi)) - ref::rn5_limit) < 1e-16);
  CHECK(std::fabs(specfun::log_q_pochhammer_inv(0.5) - ref::log_qpoch_half) < 1e-14);
  for (double q : {0.1, 0.5, std::exp(-2.0 * pi)}) {
    double product_log = 0.0;
    for (int m = 1; m < 2000; ++m) product_log -= std::log1p(-std::pow(q, m));
    CHECK(std::fabs(specfun::log_q_pochhammer_inv(q) - product_log) < 1e-13);
    // double series sum_{k,m} q^{k(m+1)} / k
    double dbl = 0.0;
    for (int k = 1; k < 400; ++k)
      for (int m = 0; m < 400; ++m) {
        const double term = std::pow(q, static_cast<double>(k) * (m + 1)) / k;
        if (term < 1e-18) break;
        dbl += term;
      }
    CHECK(std::fabs(specfun::log_q_pochhammer_inv(q) - dbl) < 1e-13);
  }
  CHECK_THROWS_AS(specfun::log_q_pochhammer_inv(0.0), DomainError);
  CHECK_THROWS_AS(specfun::log_q_pochhammer_inv(1.0), DomainError);
}

TEST_CASE("pi cot pi z is stable on the imaginary axis") {
  const auto big = specfun::pi_cot_pi(std::complex<double>(0.0, 400.0));
  CHECK(std::fabs(big.real()) < 1e-300);
  CHECK(std::fabs(big.imag() + pi) < 1e-15);
  const auto one = specfun::pi_cot_pi(std::complex<double>(0.0, 1.0));
  CHECK(std::fabs(one.imag() + pi / std::tanh(pi)) < 1e-14);
}
