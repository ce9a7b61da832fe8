#include "lapasym/quadrature.hpp"

#include <Eigen/Core>

#include "lapasym/lattice_sum.hpp"

namespace lapasym::oracles {

namespace {
constexpr double pi = specfun::pi;
}

PolarReduction::PolarReduction(long n_value) : n(n_value), beta_n(lattice::GridGeometry(n_value).beta_n) {}

double In_beta_f1(long n) {
  lattice::GridGeometry grid(n);
  if (grid.N < 1) throw DomainError("In_beta_f1: need n >= 4");
  return 8.0 * pi / (grid.delta_n * grid.delta_n) * std::log(static_cast<double>(n) * grid.beta_n / pi);
}

QuadratureResult In_beta_f2_quadrature(long n, double tol) {
  if (n < 5) throw DomainError("In_beta_f2_quadrature: need n >= 5");
  const PolarReduction polar(n);
  const double dn = static_cast<double>(n);
  auto integrand = [&](double theta) {
    double eta = std::sqrt(PolarReduction::eta_sq(theta));
    double c = std::cos(theta);
    double inner = pi * eta / (dn * c);
    double outer = polar.beta_n * eta / c;
    return std::log(12.0 - inner * inner) - std::log(12.0 - outer * outer);
  };
  const double delta = 2.0 * pi / dn;
  const double scale = 16.0 / (delta * delta);
  QuadratureOptions options;
  options.abs_tol = tol;
  auto q = integrate_1d(integrand, 0.0, PolarReduction::theta_max, options);
  return {In_beta_f1(n) + scale * q.value, scale * q.abs_error_estimate, q.evaluations};
}

QuadratureResult in_beta_tensor_quadrature(int m, long n, double tol) {
  lattice::GridGeometry grid(n);
  if (grid.N < 1) throw DomainError("in_beta_tensor_quadrature: need n >= 4");
  const auto spec = lattice::LatticeSpec::square();
  const double inner_edge = pi / static_cast<double>(n);
  const double outer_edge = grid.beta_n;
  long evaluations = 0;
  double error = 0.0;
  auto f = [&](double x, double y) { return lattice::kernel_fm(spec, m, Eigen::Vector2d(x, y)); };
  auto strip = [&](double x_lo, double x_hi, double y_lo, double y_hi) {
    auto outer = [&](double x) {
      auto inner = integrate_1d([&](double y) { return f(x, y); }, y_lo, y_hi, 0.01 * tol);
      evaluations += inner.evaluations;
      return inner.value;
    };
    auto q = integrate_1d(outer, x_lo, x_hi, tol);
    error += q.abs_error_estimate;
    return q.value;
  };
  // quadrant [0,b]^2 \ [0,e]^2 = [e,b] x [0,b]  +  [0,e] x [e,b]
  double quadrant = strip(inner_edge, outer_edge, 0.0, outer_edge) + strip(0.0, inner_edge, inner_edge, outer_edge);
  const double scale = 4.0 / (grid.delta_n * grid.delta_n);
  return {scale * quadrant, scale * error, evaluations};
}

JIntegrals J_integrals(double u_n, double tol) {
  if (!(u_n > 1.0)) throw DomainError("J_integrals: need u_n > 1");
  return {I1_log_minus_cos(2.0 * u_n - 1.0, tol), I3_log_plus_cos(1.0 - 1.0 / u_n, tol)};
}

double I1_log_minus_cos(double a, double tol) {
  if (!(a > 1.0)) throw DomainError("I1: need a > 1");
  return integrate_1d([a](double t) { return std::log(a - std::cos(t)); }, 0.0, 0.5 * pi, tol).value;
}

double I2_inv_minus_cos(double a, double tol) {
  if (!(a > 1.0)) throw DomainError("I2: need a > 1");
  return integrate_1d([a](double t) { return 1.0 / (a - std::cos(t)); }, 0.0, 0.5 * pi, tol).value;
}

double I3_log_plus_cos(double a, double tol) {
  if (!(a > 0.0)) throw DomainError("I3: need a > 0");
  return integrate_1d([a](double t) { return std::log(std::cos(t) + a); }, 0.0, 0.5 * pi, tol).value;
}

double I4_inv_plus_cos(double a, double tol) {
  if (!(a > 0.0)) throw DomainError("I4: need a > 0");
  return integrate_1d([a](double t) { return 1.0 / (std::cos(t) + a); }, 0.0, 0.5 * pi, tol).value;
}

double log_cos_integral(double theta, double tol) {
  if (!(theta > 0.0 && theta < 0.5 * pi)) throw DomainError("log_cos_integral: need 0 < theta < pi/2");
  return integrate_1d([](double t) { return std::log(std::cos(t)); }, 0.0, theta, tol).value;
}

}  // namespace lapasym::oracles
