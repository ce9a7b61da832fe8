#ifndef LAPASYM_QUADRATURE_HPP
#define LAPASYM_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "lapasym/errors.hpp"
#include "lapasym/specfun.hpp"

namespace lapasym::oracles {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-13;
  int max_depth = 40;
  int max_intervals = 5000;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes on [-1, 1] (positive half, centre last).
inline constexpr std::array<double, 8> gk15_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk15_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss 7-point weights for nodes gk15_nodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> g7_weights = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                                     0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  int depth;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename F>
Segment gk15(F& fn, double a, double b, int depth) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fc = fn(centre);
  double kronrod = fc * gk15_weights[7];
  double gauss = fc * g7_weights[3];
  for (int i = 0; i < 7; ++i) {
    double dx = half * gk15_nodes[i];
    double f_sum = fn(centre - dx) + fn(centre + dx);
    kronrod += gk15_weights[i] * f_sum;
    if (i % 2 == 1) gauss += g7_weights[i / 2] * f_sum;
  }
  return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half), depth};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 quadrature of fn over [a, b].
///
/// The interval with the largest |K15 - G7| estimate is bisected until the
/// summed estimate drops to max(abs_tol, rel_tol * |value|). Hitting
/// max_depth or max_intervals throws ConvergenceError with the partial sum.
template <typename F>
QuadratureResult integrate_1d(F&& fn, double a, double b, const QuadratureOptions& options) {
  if (!(a < b)) throw DomainError("integrate_1d: need a < b");
  std::priority_queue<detail::Segment> heap;
  auto first = detail::gk15(fn, a, b, 0);
  long evaluations = 15;
  double value = first.value;
  double error = first.error;
  heap.push(first);
  int intervals = 1;
  while (error > std::max(options.abs_tol, options.rel_tol * std::fabs(value))) {
    detail::Segment worst = heap.top();
    if (worst.depth >= options.max_depth || intervals >= options.max_intervals)
      throw ConvergenceError("integrate_1d: subdivision limit reached", value, error);
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gk15(fn, worst.a, mid, worst.depth + 1);
    auto right = detail::gk15(fn, mid, worst.b, worst.depth + 1);
    evaluations += 30;
    ++intervals;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // re-add from the pieces to shed the running-update drift
  double total = 0.0, total_error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_error += heap.top().error;
    heap.pop();
  }
  return {total, total_error, evaluations};
}

template <typename F>
QuadratureResult integrate_1d(F&& fn, double a, double b, double tol = 1e-11) {
  QuadratureOptions options;
  options.abs_tol = tol;
  return integrate_1d(std::forward<F>(fn), a, b, options);
}

/// Polar coordinates on the wedge 0 <= theta <= pi/4 of [0, beta_n]^2 \ [0, pi/n]^2.
struct PolarReduction {
  long n;
  double beta_n;

  explicit PolarReduction(long n_value);

  /// eta^2(theta) = cos^4 theta + sin^4 theta
  static double eta_sq(double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    return c * c * c * c + s * s * s * s;
  }
  double r_inner(double theta) const { return specfun::pi / (static_cast<double>(n) * std::cos(theta)); }
  double r_outer(double theta) const { return beta_n / std::cos(theta); }
  static constexpr double theta_max = specfun::pi / 4.0;
};

/// I_n^beta(f1) = (8 pi / Delta_n^2) log(n beta_n / pi); the polar integral is elementary.
double In_beta_f1(long n);

/// I_n^beta(f2) = I_n^beta(f1) + (16/Delta_n^2) * int_0^{pi/4} [log(12 - (pi eta/(n cos))^2)
/// - log(12 - (beta_n eta / cos)^2)] dtheta. Requires n >= 5.
QuadratureResult In_beta_f2_quadrature(long n, double tol = 1e-11);

/// (1/Delta_n^2) * double integral of the square-lattice f_m over D_n^beta by
/// nested 1-D quadrature on the quadrant pieces. Test oracle for small n.
QuadratureResult in_beta_tensor_quadrature(int m, long n, double tol = 1e-10);

struct JIntegrals {
  double J_n1;  // int_0^{pi/2} log(2u - 1 - cos theta)
  double J_n2;  // int_0^{pi/2} log(cos theta + 1 - 1/u)
};

/// Requires u_n > 1.
JIntegrals J_integrals(double u_n, double tol = 1e-12);

// Building blocks over [0, pi/2], evaluated by quadrature.
double I1_log_minus_cos(double a, double tol = 1e-12);  // log(a - cos), a > 1
double I2_inv_minus_cos(double a, double tol = 1e-12);  // 1 / (a - cos), a > 1
double I3_log_plus_cos(double a, double tol = 1e-12);   // log(cos + a), a > 0
double I4_inv_plus_cos(double a, double tol = 1e-12);   // 1 / (cos + a), a > 0

/// int_0^theta log(cos phi) dphi for 0 < theta < pi/2.
double log_cos_integral(double theta, double tol = 1e-13);

}  // namespace lapasym::oracles

#endif  // LAPASYM_QUADRATURE_HPP
