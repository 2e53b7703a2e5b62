#include "roughbie/kernel_split.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "roughbie/specfun.hpp"

namespace roughbie {

double chi(double u) {
  const double a = std::fabs(u);
  if (a <= 1.0) return 1.0;
  if (a >= kPi) return 0.0;
  const double e = 1.0 / (kPi - a) + 1.0 / (1.0 - a);
  // e -> -inf near 1 and +inf near pi
  if (e > 700.0) return 0.0;
  return 1.0 / (1.0 + std::exp(e));
}

double log_sinc_half(double u) {
  const double x = 0.5 * u;
  const double x2 = x * x;
  if (std::fabs(u) < 1e-3) return -x2 * (1.0 / 6.0 + x2 * (1.0 / 180.0 + x2 / 2835.0));
  return std::log(std::sin(x) / x);
}

double series_threshold(const ElasticMedium& medium) {
  return 0.05 * std::min(1.0, 1.0 / medium.kappa_s);
}

namespace {

const Complex kTwoIOverPi{0.0, 2.0 / kPi};

struct Pieces {
  CMat2 b1;
  CMat2 c1;
  CMat2 b2;
  CMat2 c2;
};

CMat2 identity() { return CMat2::Identity(); }

CMat2 outer(const Vec2& a, const Vec2& b) { return (a * b.transpose()).cast<Complex>(); }

Pieces diagonal_pieces(const ElasticMedium& m, const SurfaceProfile& surf, double s) {
  return {diagonal_B1(m, surf, s), diagonal_C1(m, surf, s), CMat2::Zero(), diagonal_C2(m, surf, s)};
}

Pieces direct_pieces(const ElasticMedium& m, const GeometryAt& g) {
  const double gap = g.s - g.t;
  if (gap == 0.0) throw std::domain_error("direct kernel split needs s != t");
  const ProfilePair p = radial_profiles(m, g.r);
  const RadialProfile bp = p.bessel.scaled(kTwoIOverPi);
  const double log_gap = std::log(std::fabs(gap));
  Pieces out;
  out.b1 = 2.0 * g.jacobian_t * tensor_from_profile(m, bp, g.chord);
  out.c1 = 2.0 * g.jacobian_t * tensor_from_profile(m, p.hankel, g.chord) - out.b1 * log_gap;
  out.b2 = 2.0 * traction_from_profile(m, bp, g.chord, g.l_t, +1);
  out.c2 = 2.0 * traction_from_profile(m, p.hankel, g.chord, g.l_t, +1) - out.b2 * log_gap;
  return out;
}

Pieces series_pieces(const ElasticMedium& m, const SurfaceProfile& surf, const GeometryAt& g) {
  const double mu = m.mu;
  const double om2 = m.omega * m.omega;
  const double jt = g.jacobian_t;
  const double r = g.r;
  const double xi_v = xi(surf, g.s, g.t);
  const CMat2 zeta_v = zeta(surf, g.s, g.t).cast<Complex>();
  const auto rc =
      specfun::regularized_combos({m.kappa_s, m.kappa_p, r, std::log(r_ratio(surf, g.s, g.t))});

  const RadialProfile bp = bessel_profile(m, r).scaled(kTwoIOverPi);
  Pieces out;
  out.b1 = 2.0 * jt * tensor_from_profile(m, bp, g.chord);
  out.b2 = 2.0 * traction_from_profile(m, bp, g.chord, g.l_t, +1);

  out.c1 = jt * (((kI / (2.0 * mu)) * rc.rho0_s - (kI / (2.0 * om2)) * rc.gamma1) * identity() +
                 (kI / (2.0 * om2)) * rc.gamma2 * zeta_v);

  const double mm = m.mu + m.mu_tilde;
  const Vec2& d = g.chord;
  const Vec2& l = g.l_t;
  const CMat2 sym = outer(l, d) + outer(d, l);
  out.c2 = mm * xi_v *
               ((-(kI / (2.0 * mu)) * rc.kr_rho1_s + (kI / (2.0 * om2)) * rc.gamma2) * identity() -
                (kI / (2.0 * om2)) * rc.gamma3 * zeta_v) +
           (m.stress_ratio() / kPi) * xi_v * identity() -
           mm * (kI / (2.0 * om2)) * rc.gamma2_reg * sym +
           2.0 * m.lambda_tilde *
               ((kI / (4.0 * mu)) * rc.rho1_reg - (kI / om2) * rc.gamma2_reg +
                (kI / (4.0 * om2)) * rc.gamma3_reg) *
               outer(d, l) -
           2.0 * m.mu_tilde * (kI / (4.0 * mu)) * rc.rho1_reg * outer(perp(d), g.l_perp_t);
  return out;
}

Pieces pieces(const ElasticMedium& m, const SurfaceProfile& surf, const GeometryAt& g,
              SplitBranch branch) {
  const double gap = std::fabs(g.s - g.t);
  switch (branch) {
    case SplitBranch::direct: return direct_pieces(m, g);
    case SplitBranch::series: return series_pieces(m, surf, g);
    case SplitBranch::automatic: break;
  }
  if (gap == 0.0) return diagonal_pieces(m, surf, g.s);
  if (gap < series_threshold(m)) return series_pieces(m, surf, g);
  return direct_pieces(m, g);
}

CMat2 image_kernel(const ElasticMedium& m, const GeometryAt& g) {
  const RadialProfile p = hankel_profile(m, g.r_image);
  return 2.0 * traction_from_profile(m, p, g.chord_image, g.l_t, -1) -
         (2.0 * g.jacobian_t) * m.eta * kI * tensor_from_profile(m, p, g.chord_image);
}

}  // namespace

CMat2 kernel_A1(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t) {
  if (s == t) throw std::domain_error("single-layer kernel is singular at s == t");
  const GeometryAt g = geometry(surface, s, t);
  return 2.0 * g.jacobian_t * tensor_from_profile(medium, hankel_profile(medium, g.r), g.chord);
}

CMat2 kernel_A2(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t) {
  if (s == t) throw std::domain_error("double-layer kernel is singular at s == t");
  const GeometryAt g = geometry(surface, s, t);
  return 2.0 * traction_from_profile(medium, hankel_profile(medium, g.r), g.chord, g.l_t, +1);
}

CMat2 kernel_A3(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t) {
  return image_kernel(medium, geometry(surface, s, t));
}

LogSplit kernel_B1_C1(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t,
                      SplitBranch branch) {
  const Pieces p = pieces(medium, surface, geometry(surface, s, t), branch);
  return {p.b1, p.c1};
}

LogSplit kernel_B2_C2(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t,
                      SplitBranch branch) {
  const Pieces p = pieces(medium, surface, geometry(surface, s, t), branch);
  return {p.b2, p.c2};
}

CMat2 diagonal_B1(const ElasticMedium& medium, const SurfaceProfile& surface, double s) {
  const double df = surface.df(s);
  const double jac = std::sqrt(1.0 + df * df);
  const double cs2 = medium.c_s2;
  const double cp2 = medium.c_p2;
  return Complex((-cs2 + 0.5 * (cs2 - cp2)) * jac / kPi, 0.0) * identity();
}

CMat2 diagonal_C1(const ElasticMedium& medium, const SurfaceProfile& surface, double s) {
  const double df = surface.df(s);
  const double j2 = 1.0 + df * df;
  const double jac = std::sqrt(j2);
  const double cs2 = medium.c_s2;
  const double cp2 = medium.c_p2;
  const Complex alpha = 1.0 + kTwoIOverPi * (specfun::kEulerGamma - std::log(2.0));
  const Complex diag = 0.25 * kI * alpha * (cs2 + cp2) -
                       (cs2 * std::log(medium.kappa_s * jac) + cp2 * std::log(medium.kappa_p * jac)) /
                           (2.0 * kPi) -
                       (cs2 - cp2) / (4.0 * kPi);
  const Vec2 lp(1.0, df);
  return jac * (diag * identity() + ((cs2 - cp2) / (2.0 * kPi * j2)) * outer(lp, lp));
}

CMat2 diagonal_C2(const ElasticMedium& medium, const SurfaceProfile& surface, double s) {
  const double df = surface.df(s);
  const double j2 = 1.0 + df * df;
  const double k = medium.stress_ratio();
  const double diag = 2.0 * k - (medium.mu + medium.mu_tilde) * medium.c_s2;
  const Vec2 lp(1.0, df);
  const double pre = -surface.ddf(s) / (2.0 * kPi * j2);
  return pre * (diag * identity() - (2.0 * k / j2) * outer(lp, lp));
}

KernelPair::KernelPair(ElasticMedium medium, SurfaceProfile surface)
    : medium_(std::move(medium)), surface_(std::move(surface)) {}

CMat2 KernelPair::full(double s, double t) const {
  if (s == t) throw std::domain_error("full kernel is singular at s == t");
  const double u = s - t;
  if (std::fabs(u) < series_threshold(medium_)) {
    const KernelValues v = evaluate(s, t);
    return (std::log(4.0 * std::pow(std::sin(0.5 * u), 2)) / (2.0 * kPi)) * v.b + v.c;
  }
  const GeometryAt g = geometry(surface_, s, t);
  const RadialProfile p = hankel_profile(medium_, g.r);
  const CMat2 a1 = 2.0 * g.jacobian_t * tensor_from_profile(medium_, p, g.chord);
  const CMat2 a2 = 2.0 * traction_from_profile(medium_, p, g.chord, g.l_t, +1);
  return -kI * medium_.eta * a1 + a2 - image_kernel(medium_, g);
}

KernelValues KernelPair::evaluate(double s, double t) const {
  const double u = s - t;
  if (std::fabs(u) >= kPi) return {CMat2::Zero(), full(s, t)};

  const GeometryAt g = geometry(surface_, s, t);
  const Pieces p = pieces(medium_, surface_, g, SplitBranch::automatic);
  const Complex ie = kI * medium_.eta;
  const CMat2 b_star = -ie * p.b1 + p.b2;
  const CMat2 c_star = -ie * p.c1 + p.c2 - image_kernel(medium_, g);
  const double w = chi(u);
  if (u == 0.0) return {kPi * b_star, c_star};
  const double mix = (1.0 - w) * std::log(std::fabs(u)) - w * log_sinc_half(u);
  return {(kPi * w) * b_star, mix * b_star + c_star};
}

KernelPair kernel_pair(const ElasticMedium& medium, const SurfaceProfile& surface) {
  return KernelPair(medium, surface);
}

}  // namespace roughbie
