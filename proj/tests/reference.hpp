#ifndef LAPASYM_TESTS_REFERENCE_HPP
#define LAPASYM_TESTS_REFERENCE_HPP

// 20-digit values produced by tests/oracles/reference_values.py (mpmath, 40 digits).
namespace ref {

inline constexpr double catalan = 0.91596559417721901505;
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double gamma_quarter = 3.6256099082219083119;
inline constexpr double gamma_third = 2.6789385347077476337;

inline constexpr double cl2_1 = 1.0139591323607685043;
inline constexpr double cl2_0p3 = 0.66156701022020101655;
inline constexpr double cl2_2p5 = 0.43359820323553277936;
inline constexpr double cl2_3 = 0.098026209391301421161;
inline constexpr double cl2_7 = 0.96059820624535721484;

inline constexpr double digamma_0p001 = -1000.5755719318103005;
inline constexpr double digamma_m2p5 = 1.1031566406452431872;
inline constexpr double digamma_12345p678 = 9.4210208207417608869;
inline constexpr double digamma_3p2i_re = 1.1645915153739775267;
inline constexpr double digamma_3p2i_im = 0.67080728264223022839;
inline constexpr double digamma_0p5p7i_re = 1.9450567385690904599;
inline constexpr double digamma_0p5p7i_im = 1.570796326794896619;

inline constexpr double mu = 30.859875570362994846;
inline constexpr double nu = 5.5584675272605485928;
inline constexpr double rho = 0.09069272834920375171;
inline constexpr double lambda = -5.0797840267472546574;
inline constexpr double prop31_linear = 0.78331071599394832167;
inline constexpr double prop31_n2 = -0.37530431409197106305;

inline constexpr double calA_N = 1.2858281487651247853;
inline constexpr double beta3 = 3.8654834449971645043;
inline constexpr double rn5_limit = 0.0018726824497685461156;
inline constexpr double log_qpoch_half = 1.2420620948124149458;
inline constexpr double qn_c1 = -3.1129894216489804124;

inline constexpr double square_n2 = 0.19506253268056520697;
inline constexpr double triangular_n2 = 0.23521402183017776505;
inline constexpr double muj_n2 = 0.36317445683108332331;
inline constexpr double integral_f_n2 = 0.30437599381691442904;

inline constexpr double in_beta_f2_5 = 19.743302210812887515;
inline constexpr double in_beta_f2_400 = 550862.44885998058812;

}  // namespace ref

#endif  // LAPASYM_TESTS_REFERENCE_HPP
