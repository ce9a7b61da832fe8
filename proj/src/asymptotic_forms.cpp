#include "lapasym/asymptotic_forms.hpp"

#include "lapasym/errors.hpp"
#include "lapasym/lattice_sum.hpp"
#include "lapasym/specfun.hpp"

namespace lapasym::asymptotics {

namespace {

constexpr double pi = specfun::pi;

void require_n(long n, long minimum, const char* what) {
  if (n < minimum) throw DomainError(std::string(what) + ": n too small");
}

int residue(long n) { return static_cast<int>(n % 4); }

}  // namespace

ExpansionForm main_square_form() {
  const auto& k = specfun::constants();
  double lead = 2.0 / pi;
  double inner = k.euler_gamma + std::log(4.0 * std::sqrt(2.0 * pi) / (k.gamma_quarter * k.gamma_quarter));
  return {lead, lead * inner, 0.0, 0.0, std::nullopt, "square"};
}

ExpansionForm triangular_form() {
  const auto& k = specfun::constants();
  double lead = std::sqrt(3.0) / pi;
  double g3 = k.gamma_third;
  double inner = k.euler_gamma + std::log(4.0 * pi * std::pow(3.0, 0.25) / (g3 * g3 * g3));
  return {lead, lead * inner, 0.0, 0.0, std::nullopt, "triangular"};
}

ExpansionForm muj_form() {
  const auto& k = specfun::constants();
  double lead = 4.0 / (3.0 * pi);
  double inner = k.euler_gamma + std::log(4.0 * std::sqrt(6.0 * pi) / (k.gamma_quarter * k.gamma_quarter));
  return {lead, lead * inner, 0.0, 0.0, std::nullopt, "modified_union_jack"};
}

ExpansionForm in_f_square_form() {
  const auto& k = specfun::constants();
  return {2.0 / pi, (std::log(8.0 / (pi * pi)) + 4.0 * k.catalan_G / pi) / pi, 0.0, 0.0, std::nullopt, "integral_f_square"};
}

ExpansionForm in_beta_f1_form(int n0) {
  return {2.0 / pi, -std::log(4.0) / pi, 2.0 * (2 - n0) / pi, 0.0, n0, "restricted_integral_f1"};
}

ExpansionForm prop31_form(int n0) {
  const auto& c = prop31_constants();
  return {2.0 / pi, c.n2_coefficient, c.linear_coefficient * (2 - n0), 0.0, n0, "restricted_integral_f2"};
}

ExpansionForm lattice_model(const std::string& lattice_name) {
  auto spec = lattice::lattice_by_name(lattice_name);
  if (spec.name == "square") return main_square_form();
  if (spec.name == "triangular") return triangular_form();
  return muj_form();
}

double thm_main_square(long n) {
  require_n(n, 2, "thm_main_square");
  return main_square_form().evaluate(static_cast<double>(n));
}

double expansion_triangular(long n) {
  require_n(n, 2, "expansion_triangular");
  return triangular_form().evaluate(static_cast<double>(n));
}

double expansion_muj(long n) {
  require_n(n, 2, "expansion_muj");
  return muj_form().evaluate(static_cast<double>(n));
}

double In_f_square(long n) {
  require_n(n, 1, "In_f_square");
  return in_f_square_form().evaluate(static_cast<double>(n));
}

double prop31_expansion(long n) {
  require_n(n, 5, "prop31_expansion");
  return prop31_form(residue(n)).evaluate(static_cast<double>(n));
}

const Prop31Constants& prop31_constants() {
  static const Prop31Constants value = [] {
    const auto& k = specfun::constants();
    Prop31Constants c{};
    c.mu = std::sqrt(24.0 * 24.0 + 48.0 * pi * pi - std::pow(pi, 4));
    c.nu = (c.mu + 24.0) / (pi * pi);
    c.rho = c.nu - std::sqrt(c.nu * c.nu - 1.0);
    const double two_atan_rho = 2.0 * std::atan(c.rho);
    const double shared_acos = std::acos((c.nu - 1.0) / (c.nu + 1.0));
    c.lambda = specfun::clausen_cl2(two_atan_rho) - specfun::clausen_cl2(pi + two_atan_rho) +
               (0.5 * pi + two_atan_rho) * std::log(c.rho) - specfun::clausen_cl2(0.5 * pi + shared_acos) -
               specfun::clausen_cl2(0.5 * pi - shared_acos);
    c.n2_coefficient = (2.0 / pi) * ((2.0 * k.catalan_G + c.lambda) / pi + std::log(2.0 * std::sqrt(6.0) / pi));
    const double t = std::sqrt((c.nu + 1.0) / (c.nu - 1.0));
    const double sn = std::sqrt(c.nu);
    c.linear_coefficient = 96.0 / (pi * pi * c.mu) * (2.0 * t * std::atan(t) + std::log((sn + 1.0) / (sn - 1.0)) / sn);
    return c;
  }();
  return value;
}

PolarAuxiliary polar_auxiliary(long n) {
  require_n(n, 4, "polar_auxiliary");
  const auto& c = prop31_constants();
  PolarAuxiliary aux{};
  aux.n = n;
  aux.beta_n = lattice::GridGeometry(n).beta_n;
  aux.alpha_n = (aux.beta_n * aux.beta_n + 6.0) / (2.0 * aux.beta_n * aux.beta_n);
  aux.u_n = aux.alpha_n + std::sqrt(aux.alpha_n * aux.alpha_n - 0.5);
  aux.tau_first = 2.0 * aux.u_n - 1.0;
  aux.tau_second = 1.0 - 1.0 / aux.u_n;
  const double dn = static_cast<double>(n);
  aux.b_first = dn * (aux.tau_first - c.nu);
  aux.b_second = dn * (aux.tau_second - (c.nu - 1.0) / (c.nu + 1.0));
  return aux;
}

double J11(double a) {
  if (!(a > 1.0)) throw DomainError("J11: need a > 1");
  const double r = a - std::sqrt(a * a - 1.0);
  const double t = 2.0 * std::atan(r);
  return specfun::clausen_cl2(pi + t) - specfun::clausen_cl2(t) - (0.5 * pi + t) * std::log(r) -
         0.5 * pi * std::log(2.0);
}

double J12(double a) {
  if (!(a > 1.0)) throw DomainError("J12: need a > 1");
  return 2.0 / std::sqrt(a * a - 1.0) * std::atan(std::sqrt((a + 1.0) / (a - 1.0)));
}

double J21(double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("J21: need 0 < a < 1");
  const double c = std::acos(a);
  return specfun::clausen_cl2(0.5 * pi + c) + specfun::clausen_cl2(0.5 * pi - c) - 0.5 * pi * std::log(2.0);
}

double J22(double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("J22: need 0 < a < 1");
  const double s = std::sqrt((1.0 - a) * (1.0 + a));
  // log((1+s)/a) / s, with log1p keeping accuracy as a -> 1
  return std::log1p((1.0 - a + s) / a) / s;
}

std::pair<double, double> J_closed_forms(double a, JRegime regime) {
  if (regime == JRegime::gt1) {
    if (!(a > 1.0)) throw DomainError("J_closed_forms: regime gt1 needs a > 1");
    return {J11(a), J12(a)};
  }
  if (!(a > 0.0 && a < 1.0)) throw DomainError("J_closed_forms: regime in01 needs 0 < a < 1");
  return {J21(a), J22(a)};
}

Beta3Parts rn3_beta3_parts() {
  Beta3Parts p{};
  p.calA_N = std::sqrt(1.0 + (pi * pi / 12.0) * (1.0 - pi * pi / 48.0));
  const double root = std::sqrt(1.0 + p.calA_N);
  const double s6 = 2.0 * std::sqrt(6.0);
  const double w = std::sqrt(48.0 - pi * pi);
  p.alpha_N8 = pi / s6 / (p.calA_N * root) * std::log((s6 * root + pi) / (s6 * root - pi));
  p.alpha_N11 = s6 / w * root / p.calA_N;
  p.alpha_N9 = p.alpha_N11 * std::atan(w / (s6 * root));
  p.beta3 = 2.0 * (p.alpha_N8 - 2.0 * p.alpha_N9 + pi * p.alpha_N11);
  return p;
}

double rn3_beta3() { return rn3_beta3_parts().beta3; }

double rn5_limit() {
  const auto& k = specfun::constants();
  return std::log(2.0 * k.pi_three_quarters) - pi / 12.0 - std::log(k.gamma_quarter);
}

double qn_c1() {
  const double s = 4.0 * std::sqrt(3.0);
  return pi / (2.0 * std::sqrt(3.0)) * std::log((s + pi) / (s - pi)) - 4.0;
}

double qn_expansion(long n) {
  require_n(n, 5, "qn_expansion");
  return pi * pi / 6.0 + qn_c1() / static_cast<double>(n);
}

}  // namespace lapasym::asymptotics
