#ifndef LAPASYM_ASYMPTOTIC_FORMS_HPP
#define LAPASYM_ASYMPTOTIC_FORMS_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>

namespace lapasym::asymptotics {

/// c0 n^2 log n + c1 n^2 + c2 n + c3, tagged with the residue n mod 4 it
/// belongs to (empty = every n).
struct ExpansionForm {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  std::optional<int> n0_class;
  std::string label;

  double evaluate(double n) const { return c0 * n * n * std::log(n) + c1 * n * n + c2 * n + c3; }
};

ExpansionForm main_square_form();
ExpansionForm triangular_form();
ExpansionForm muj_form();
ExpansionForm in_f_square_form();
/// Restricted-region f1 integral, n0-dependent linear term.
ExpansionForm in_beta_f1_form(int n0);
ExpansionForm prop31_form(int n0);

/// Two-term model for a built-in lattice name (square, triangular, modified_union_jack).
ExpansionForm lattice_model(const std::string& lattice_name);

double thm_main_square(long n);
double expansion_triangular(long n);
double expansion_muj(long n);
double In_f_square(long n);
double prop31_expansion(long n);

struct Prop31Constants {
  double mu;
  double nu;
  double rho;
  double lambda;
  double n2_coefficient;      // coefficient of n^2
  double linear_coefficient;  // multiplies (2 - n0) n
};

const Prop31Constants& prop31_constants();

/// Per-n auxiliaries of the polar reduction.
struct PolarAuxiliary {
  long n;
  double beta_n;
  double alpha_n;  // (beta_n^2 + 6) / (2 beta_n^2)
  double u_n;      // alpha_n + sqrt(alpha_n^2 - 1/2)
  double tau_first;   // 2 u_n - 1
  double tau_second;  // 1 - 1/u_n
  double b_first;     // n (tau_first - nu)
  double b_second;    // n (tau_second - (nu - 1)/(nu + 1))
};

PolarAuxiliary polar_auxiliary(long n);

enum class JRegime { gt1, in01 };

/// gt1: (J11(a), J12(a)) for a > 1. in01: (J21(a), J22(a)) for 0 < a < 1.
std::pair<double, double> J_closed_forms(double a, JRegime regime);

double J11(double a);
double J12(double a);
double J21(double a);
double J22(double a);

struct Beta3Parts {
  double calA_N;
  double alpha_N8;
  double alpha_N9;
  double alpha_N11;
  double beta3;
};

Beta3Parts rn3_beta3_parts();
double rn3_beta3();

/// log(2 pi^{3/4} / (e^{pi/12} Gamma(1/4))).
double rn5_limit();

/// (pi / (2 sqrt 3)) log((4 sqrt 3 + pi)/(4 sqrt 3 - pi)) - 4
double qn_c1();
/// pi^2/6 + qn_c1()/n, n >= 5.
double qn_expansion(long n);

}  // namespace lapasym::asymptotics

#endif  // LAPASYM_ASYMPTOTIC_FORMS_HPP
