#include "roughbie/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace roughbie::specfun {

namespace {

using ld = long double;

constexpr ld kPiL = 3.141592653589793238462643383279502884L;
constexpr ld kGammaL = 0.57721566490153286060651209008240243L;

void check_order(int n) {
  if (n < 0 || n > 3) {
    throw std::domain_error("bessel order must be in 0..3, got " + std::to_string(n));
  }
}

void check_finite_nonnegative(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("bessel argument must be finite and >= 0");
  }
}

void check_positive(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("Neumann/Hankel argument must be finite and > 0");
  }
}

// Ascending series for all four orders at once, with q = x^2/4:
//   jcore[n] = sum_k (-q)^k / (k! (n+k)!)              (J_n = (x/2)^n jcore[n])
//   score[n] = sum_k (-q)^k (H_k + H_{n+k}) / (k! (n+k)!)  (S_n = (x/2)^n score[n])
struct SeriesCores {
  std::array<ld, 4> jcore{};
  std::array<ld, 4> score{};
};

SeriesCores series_cores(ld x) {
  SeriesCores out;
  const ld q = x * x / 4.0L;
  // base = (-q)^k / (k!)^2, harm[k] = H_k
  ld base = 1.0L;
  ld hk = 0.0L;
  for (int k = 0; k < 200; ++k) {
    // denominators (k+1)...(k+n) and H_{n+k}
    ld ratio = 1.0L;
    ld hnk = hk;
    for (int n = 0; n < 4; ++n) {
      if (n > 0) {
        ratio /= static_cast<ld>(k + n);
        hnk += 1.0L / static_cast<ld>(k + n);
      }
      const ld term = base * ratio;
      out.jcore[n] += term;
      out.score[n] += term * (hk + hnk);
    }
    if (k > q && std::fabs(base) * (1.0L + hk) < 1e-24L) break;
    base *= -q / (static_cast<ld>(k + 1) * static_cast<ld>(k + 1));
    hk += 1.0L / static_cast<ld>(k + 1);
  }
  return out;
}

// Finite pole sum P_n(x) = sum_{k<n} (n-k-1)!/k! (x/2)^(2k-n).
ld pole_sum(int n, ld x) {
  switch (n) {
    case 0: return 0.0L;
    case 1: return 2.0L / x;
    case 2: return 4.0L / (x * x) + 1.0L;
    default: return 16.0L / (x * x * x) + 2.0L / x + x / 4.0L;
  }
}

CylinderValues series_values(double xd) {
  const ld x = xd;
  const SeriesCores c = series_cores(x);
  CylinderValues v;
  const ld half = x / 2.0L;
  const ld logterm = std::log(half) + kGammaL;
  ld halfpow = 1.0L;  // (x/2)^n
  ld twopow = 1.0L;   // 2^n
  for (int n = 0; n < 4; ++n) {
    const ld jn = halfpow * c.jcore[n];
    v.j[n] = static_cast<double>(jn);
    v.j_over_pow[n] = static_cast<double>(c.jcore[n] / twopow);
    if (xd > 0.0) {
      const ld yn = (2.0L / kPiL) * logterm * jn - (pole_sum(n, x) + halfpow * c.score[n]) / kPiL;
      v.y[n] = static_cast<double>(yn);
    } else {
      v.y[n] = -std::numeric_limits<double>::infinity();
    }
    halfpow *= half;
    twopow *= 2.0L;
  }
  return v;
}

// Hankel asymptotic expansion for H_0 and H_1, then upward recurrence
// (stable for x > 3 for both J and Y).
CylinderValues asymptotic_values(double x) {
  std::array<std::complex<double>, 4> h;
  const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
  const std::complex<double> eix{std::cos(x), std::sin(x)};
  const std::complex<double> eminus_quarter{std::numbers::sqrt2 / 2.0, -std::numbers::sqrt2 / 2.0};
  for (int n = 0; n < 2; ++n) {
    const double mu4 = 4.0 * n * n;
    // sum_k i^k a_k / x^k with a_k = a_{k-1} (4n^2 - (2k-1)^2) / (8k)
    double p = 1.0;
    double q = 0.0;
    double a = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 80; ++k) {
      const double odd = 2.0 * k - 1.0;
      a *= (mu4 - odd * odd) / (8.0 * k * x);
      const double mag = std::fabs(a);
      if (mag > prev) break;
      switch (k % 4) {
        case 0: p += a; break;
        case 1: q += a; break;
        case 2: p -= a; break;
        default: q -= a; break;
      }
      if (mag < 1e-17) break;
      prev = mag;
    }
    // (-i)^n e^{-i pi/4} e^{ix}
    std::complex<double> phase = eix * eminus_quarter;
    if (n == 1) phase *= std::complex<double>(0.0, -1.0);
    h[n] = amp * phase * std::complex<double>(p, q);
  }
  h[2] = (2.0 / x) * h[1] - h[0];
  h[3] = (4.0 / x) * h[2] - h[1];
  CylinderValues v;
  double xpow = 1.0;
  for (int n = 0; n < 4; ++n) {
    v.j[n] = h[n].real();
    v.y[n] = h[n].imag();
    v.j_over_pow[n] = v.j[n] / xpow;
    xpow *= x;
  }
  return v;
}

}  // namespace

CylinderValues cylinder_values(double x) {
  check_finite_nonnegative(x);
  return x < kSeriesSwitch ? series_values(x) : asymptotic_values(x);
}

double bessel_j(int n, double x) {
  check_order(n);
  check_finite_nonnegative(x);
  return cylinder_values(x).j[n];
}

double bessel_y(int n, double x) {
  check_order(n);
  check_positive(x);
  return cylinder_values(x).y[n];
}

std::complex<double> hankel1(int n, double x) {
  check_order(n);
  check_positive(x);
  return cylinder_values(x).h(n);
}

double j_over_pow(int n, double x) {
  check_order(n);
  check_finite_nonnegative(x);
  return cylinder_values(x).j_over_pow[n];
}

double harmonic(int p) {
  if (p < 0) throw std::domain_error("harmonic number needs p >= 0");
  double sum = 0.0;
  for (int m = 1; m <= p; ++m) sum += 1.0 / m;
  return sum;
}

double neumann_remainder_over_pow(int n, double x) {
  check_order(n);
  check_finite_nonnegative(x);
  if (x < kSeriesSwitch) {
    const SeriesCores c = series_cores(x);
    return static_cast<double>(c.score[n] / std::pow(2.0L, n));
  }
  // S_n = 2 (ln(x/2) + C_E) J_n - pi Y_n - P_n
  const CylinderValues v = asymptotic_values(x);
  const double sn = 2.0 * (std::log(x / 2.0) + kEulerGamma) * v.j[n] - std::numbers::pi * v.y[n] -
                    static_cast<double>(pole_sum(n, x));
  return sn / std::pow(x, n);
}

RegularizedCombos regularized_combos(const RegularizedComboInput& in) {
  if (!(in.kappa_s > in.kappa_p && in.kappa_p > 0.0)) {
    throw std::domain_error("regularized combos need kappa_s > kappa_p > 0");
  }
  if (!(in.r >= 0.0) || !std::isfinite(in.log_scale)) {
    throw std::domain_error("regularized combos need r >= 0 and a finite log scale");
  }
  using C = std::complex<double>;
  const C two_i_pi{0.0, 2.0 / std::numbers::pi};
  const C i_pi{0.0, 1.0 / std::numbers::pi};

  const double ks = in.kappa_s;
  const double kp = in.kappa_p;
  const double r = in.r;
  const double r2 = r * r;
  const double zs = ks * r;
  const double zp = kp * r;

  const CylinderValues cs = cylinder_values(zs);
  const CylinderValues cp = cylinder_values(zp);
  std::array<double, 4> sop_s{};
  std::array<double, 4> sop_p{};
  for (int n = 0; n < 4; ++n) {
    sop_s[n] = neumann_remainder_over_pow(n, zs);
    sop_p[n] = neumann_remainder_over_pow(n, zp);
  }

  const C ls = 1.0 + two_i_pi * (kEulerGamma + std::log(ks / 2.0) + in.log_scale);
  const C lp = 1.0 + two_i_pi * (kEulerGamma + std::log(kp / 2.0) + in.log_scale);

  const double ks2 = ks * ks, kp2 = kp * kp;
  const double ks4 = ks2 * ks2, kp4 = kp2 * kp2;
  const double ks6 = ks4 * ks2, kp6 = kp4 * kp2;
  const double delta2 = ks2 - kp2;
  const double delta4 = ks4 - kp4;

  RegularizedCombos out;
  out.rho0_s = ls * cs.j[0] - i_pi * sop_s[0];
  out.kr_rho1_s = ls * (zs * zs * cs.j_over_pow[1]) - two_i_pi - i_pi * (zs * zs * sop_s[1]);
  out.rho1_reg = ks2 * (ls * cs.j_over_pow[1] - i_pi * sop_s[1]);
  out.gamma1 = ks2 * ls * cs.j_over_pow[1] - kp2 * lp * cp.j_over_pow[1] -
               i_pi * (ks2 * sop_s[1] - kp2 * sop_p[1]);
  out.gamma2_reg = ks4 * ls * cs.j_over_pow[2] - kp4 * lp * cp.j_over_pow[2] -
                   i_pi * (ks4 * sop_s[2] - kp4 * sop_p[2]);
  out.gamma2 = r2 * out.gamma2_reg - i_pi * delta2;
  out.gamma3_reg = r2 * (ks6 * ls * cs.j_over_pow[3] - kp6 * lp * cp.j_over_pow[3]) -
                   i_pi * (delta4 / 4.0) - i_pi * r2 * (ks6 * sop_s[3] - kp6 * sop_p[3]);
  out.gamma3 = r2 * out.gamma3_reg - two_i_pi * delta2;
  return out;
}

}  // namespace roughbie::specfun
