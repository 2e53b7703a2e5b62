#pragma once

#include <array>
#include <complex>

namespace roughbie::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Arguments below this use ascending series (in extended precision),
/// arguments at or above it use the Hankel asymptotic expansion.
inline constexpr double kSeriesSwitch = 17.0;

/// Bessel function of the first kind, orders 0..3, x >= 0.
double bessel_j(int n, double x);

/// Neumann function, orders 0..3, x > 0.
double bessel_y(int n, double x);

/// First-kind Hankel function H_n = J_n + i Y_n, orders 0..3, x > 0.
std::complex<double> hankel1(int n, double x);

/// J_n(x) / x^n with the removable singularity filled in (1/(2^n n!) at 0).
double j_over_pow(int n, double x);

/// Harmonic number: 0 for p = 0, otherwise sum_{m=1}^p 1/m.
double harmonic(int p);

/// Regular part of the Neumann series, divided by x^n:
///   S_n(x) / x^n,  S_n(x) = sum_k (-1)^k (harmonic(k) + harmonic(n+k)) / (k!(n+k)!) (x/2)^(2k+n)
/// so that Y_n(x) = (2/pi)(ln(x/2) + C_E) J_n(x) - (1/pi) P_n(x) - (1/pi) S_n(x),
/// P_n being the finite pole sum. Bounded at x = 0.
double neumann_remainder_over_pow(int n, double x);

/// All of J_0..J_3, Y_0..Y_3 and J_n/x^n at one argument. For x == 0 the
/// Y entries are -inf.
struct CylinderValues {
  std::array<double, 4> j{};
  std::array<double, 4> y{};
  std::array<double, 4> j_over_pow{};

  std::complex<double> h(int n) const { return {j[n], y[n]}; }
};

CylinderValues cylinder_values(double x);

/// Inputs for the log-regularized Hankel combinations
///   rho_n(kappa) = H_n(kappa r) - (2i/pi) J_n(kappa r) ln|s - t|
/// where the chord length r and parameter gap |s-t| enter only through r and
/// log_scale = ln(r / |s - t|).
struct RegularizedComboInput {
  double kappa_s = 0.0;
  double kappa_p = 0.0;
  double r = 0.0;
  double log_scale = 0.0;
};

/// Bounded combinations of rho_n. Every member is finite at r = 0, where it
/// takes its diagonal limit. Differences "s - p" combine the shear and
/// compressional wavenumbers, Delta2 = kappa_s^2 - kappa_p^2.
struct RegularizedCombos {
  std::complex<double> rho0_s;      ///< rho_0(kappa_s)
  std::complex<double> kr_rho1_s;   ///< kappa_s r rho_1(kappa_s)
  std::complex<double> gamma1;      ///< (kappa_s rho_1(kappa_s) - kappa_p rho_1(kappa_p)) / r
  std::complex<double> gamma2;      ///< kappa_s^2 rho_2(kappa_s) - kappa_p^2 rho_2(kappa_p)
  std::complex<double> gamma3;      ///< r (kappa_s^3 rho_3(kappa_s) - kappa_p^3 rho_3(kappa_p))
  std::complex<double> rho1_reg;    ///< kappa_s rho_1(kappa_s) / r + (2i/pi) / r^2
  std::complex<double> gamma2_reg;  ///< gamma2 / r^2 + (i/pi) Delta2 / r^2
  std::complex<double> gamma3_reg;  ///< gamma3 / r^2 + (2i/pi) Delta2 / r^2
};

RegularizedCombos regularized_combos(const RegularizedComboInput& in);

}  // namespace roughbie::specfun
