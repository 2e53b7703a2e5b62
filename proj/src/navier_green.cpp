#include "roughbie/navier_green.hpp"

#include <cmath>
#include <stdexcept>

#include "roughbie/specfun.hpp"

namespace roughbie {

ElasticMedium ElasticMedium::make(double lambda, double mu, double omega, std::optional<Complex> eta) {
  if (!std::isfinite(lambda) || !std::isfinite(mu) || !std::isfinite(omega)) {
    throw std::invalid_argument("medium parameters must be finite");
  }
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  if (!(lambda + 2.0 * mu > 0.0)) throw std::invalid_argument("lambda + 2 mu must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");

  ElasticMedium m;
  m.lambda = lambda;
  m.mu = mu;
  m.omega = omega;
  m.c_s2 = 1.0 / mu;
  m.c_p2 = 1.0 / (lambda + 2.0 * mu);
  m.kappa_s = omega * std::sqrt(m.c_s2);
  m.kappa_p = omega * std::sqrt(m.c_p2);
  m.mu_tilde = mu * (lambda + mu) / (lambda + 3.0 * mu);
  m.lambda_tilde = (lambda + mu) * (lambda + 2.0 * mu) / (lambda + 3.0 * mu);
  m.eta = eta.value_or(Complex{m.kappa_s, 0.0});
  if (!std::isfinite(m.eta.real()) || !std::isfinite(m.eta.imag()) || !(m.eta.real() > 0.0)) {
    throw std::invalid_argument("eta must be finite with positive real part");
  }
  return m;
}

namespace {

RadialProfile hankel_from(const ElasticMedium& m, const specfun::CylinderValues& vs,
                          const specfun::CylinderValues& vp, double r) {
  const double ks = m.kappa_s;
  const double kp = m.kappa_p;
  RadialProfile p;
  p.z0 = vs.h(0);
  p.f1 = ks * vs.h(1) / r;
  p.g1 = (ks * vs.h(1) - kp * vp.h(1)) / r;
  p.f2 = (ks * ks * vs.h(2) - kp * kp * vp.h(2)) / (r * r);
  p.f3 = (ks * ks * ks * vs.h(3) - kp * kp * kp * vp.h(3)) / (r * r * r);
  return p;
}

RadialProfile bessel_from(const ElasticMedium& m, const specfun::CylinderValues& vs,
                          const specfun::CylinderValues& vp) {
  const double ks2 = m.kappa_s * m.kappa_s;
  const double kp2 = m.kappa_p * m.kappa_p;
  RadialProfile p;
  p.z0 = vs.j[0];
  p.f1 = ks2 * vs.j_over_pow[1];
  p.g1 = ks2 * vs.j_over_pow[1] - kp2 * vp.j_over_pow[1];
  p.f2 = ks2 * ks2 * vs.j_over_pow[2] - kp2 * kp2 * vp.j_over_pow[2];
  p.f3 = ks2 * ks2 * ks2 * vs.j_over_pow[3] - kp2 * kp2 * kp2 * vp.j_over_pow[3];
  return p;
}

}  // namespace

RadialProfile hankel_profile(const ElasticMedium& medium, double r) {
  if (!(r > 0.0)) throw std::domain_error("Green tensor evaluated at coincident points");
  return hankel_from(medium, specfun::cylinder_values(medium.kappa_s * r),
                     specfun::cylinder_values(medium.kappa_p * r), r);
}

RadialProfile bessel_profile(const ElasticMedium& medium, double r) {
  return bessel_from(medium, specfun::cylinder_values(medium.kappa_s * r),
                     specfun::cylinder_values(medium.kappa_p * r));
}

ProfilePair radial_profiles(const ElasticMedium& medium, double r) {
  if (!(r > 0.0)) throw std::domain_error("Green tensor evaluated at coincident points");
  const auto vs = specfun::cylinder_values(medium.kappa_s * r);
  const auto vp = specfun::cylinder_values(medium.kappa_p * r);
  return {hankel_from(medium, vs, vp, r), bessel_from(medium, vs, vp)};
}

namespace {

struct Coefficients {
  Complex a;       // coefficient of I
  Complex b;       // coefficient of d d^T
  Complex da_r;    // a'(r) / r
  Complex db_r;    // b'(r) / r
};

Coefficients coefficients(const ElasticMedium& m, const RadialProfile& p) {
  const Complex i_mu = kI / (4.0 * m.mu);
  const Complex i_om = kI / (4.0 * m.omega * m.omega);
  return {i_mu * p.z0 - i_om * p.g1, i_om * p.f2, -i_mu * p.f1 + i_om * p.f2, -i_om * p.f3};
}

}  // namespace

CMat2 tensor_from_profile(const ElasticMedium& medium, const RadialProfile& p, const Vec2& d) {
  const Coefficients c = coefficients(medium, p);
  CMat2 g = c.b * (d * d.transpose()).cast<Complex>();
  g(0, 0) += c.a;
  g(1, 1) += c.a;
  return g;
}

CMat2 traction_from_profile(const ElasticMedium& medium, const RadialProfile& p, const Vec2& d,
                            const Vec2& n, int mirror) {
  const Coefficients c = coefficients(medium, p);
  const double q2 = mirror < 0 ? -1.0 : 1.0;
  const Vec2 qd(d.x(), q2 * d.y());
  const Vec2 qn(n.x(), q2 * n.y());
  const Vec2 n_perp = perp(n);
  const double n_qd = n.dot(qd);
  const double d_qd = d.dot(qd);
  const double trace_q = 1.0 + q2;

  CMat2 out;
  for (int j = 0; j < 2; ++j) {
    const Complex div = -c.da_r * qd(j) - c.db_r * d_qd * d(j) - c.b * (qd(j) + trace_q * d(j));
    const double rot_a = j == 0 ? qd.y() : -qd.x();
    const double rot_b = j == 0 ? -d.y() : q2 * d.x();
    const Complex div_perp =
        -c.da_r * rot_a - c.db_r * d(j) * (qd.y() * d.x() - qd.x() * d.y()) - c.b * rot_b;
    for (int k = 0; k < 2; ++k) {
      const Complex normal_derivative = -c.da_r * n_qd * (j == k ? 1.0 : 0.0) -
                                        c.db_r * n_qd * d(j) * d(k) -
                                        c.b * (qn(j) * d(k) + qn(k) * d(j));
      out(j, k) = (medium.mu + medium.mu_tilde) * normal_derivative +
                  medium.lambda_tilde * n(k) * div - medium.mu_tilde * n_perp(k) * div_perp;
    }
  }
  return out;
}

CMat2 green_tensor(const ElasticMedium& medium, const Vec2& x, const Vec2& y) {
  const Vec2 d = x - y;
  return tensor_from_profile(medium, hankel_profile(medium, d.norm()), d);
}

CMat2 green_traction(const ElasticMedium& medium, const SurfaceProfile& surface, const Vec2& x,
                     double t) {
  const Vec2 d = x - surface.point(t);
  const double dft = surface.df(t);
  const Vec2 nu = Vec2(-dft, 1.0) / std::sqrt(1.0 + dft * dft);
  return traction_from_profile(medium, hankel_profile(medium, d.norm()), d, nu, +1);
}

CMat2 image_combined(const ElasticMedium& medium, const SurfaceProfile& surface, const Vec2& x,
                     double t) {
  const Vec2 d = x - surface.image_point(t);
  const double r = d.norm();
  if (!(r > 0.0)) throw std::domain_error("observation point coincides with an image point");
  const double dft = surface.df(t);
  const Vec2 nu = Vec2(-dft, 1.0) / std::sqrt(1.0 + dft * dft);
  const RadialProfile p = hankel_profile(medium, r);
  return traction_from_profile(medium, p, d, nu, -1) -
         medium.eta * kI * tensor_from_profile(medium, p, d);
}

}  // namespace roughbie
