#pragma once

#include <optional>

#include "roughbie/surface.hpp"
#include "roughbie/types.hpp"

namespace roughbie {

/// Isotropic elastic medium at a fixed frequency, with the coupling constant
/// of the combined layer potential and the stress parameters that make the
/// double-layer kernel weakly singular.
struct ElasticMedium {
  double lambda = 1.0;
  double mu = 1.0;
  double omega = 20.0;
  Complex eta{0.0, 0.0};

  double kappa_s = 0.0;
  double kappa_p = 0.0;
  double c_s2 = 0.0;  ///< 1/mu
  double c_p2 = 0.0;  ///< 1/(lambda + 2 mu)
  double mu_tilde = 0.0;
  double lambda_tilde = 0.0;

  /// Validates mu > 0, lambda + 2 mu > 0, omega > 0 and Re(eta) > 0 and fills
  /// in the derived fields. eta defaults to kappa_s.
  static ElasticMedium make(double lambda, double mu, double omega,
                            std::optional<Complex> eta = std::nullopt);

  /// (lambda + mu) / (lambda + 3 mu) = mu_tilde / mu = lambda_tilde / (lambda + 2 mu).
  double stress_ratio() const { return (lambda + mu) / (lambda + 3.0 * mu); }
};

/// Radial functions of r that determine the Green tensor and its traction:
///   z0 = H0(ks r),  f1 = ks H1(ks r) / r,
///   g1 = (ks H1(ks r) - kp H1(kp r)) / r,
///   f2 = (ks^2 H2(ks r) - kp^2 H2(kp r)) / r^2,
///   f3 = (ks^3 H3(ks r) - kp^3 H3(kp r)) / r^3.
/// Every kernel in the solver is linear in these five values, so replacing
/// H_n by J_n or by a log-regularized variant yields the matching kernel piece.
struct RadialProfile {
  Complex z0;
  Complex f1;
  Complex g1;
  Complex f2;
  Complex f3;

  RadialProfile scaled(Complex c) const { return {c * z0, c * f1, c * g1, c * f2, c * f3}; }
};

/// Profile built from H_n. Requires r > 0.
RadialProfile hankel_profile(const ElasticMedium& medium, double r);

/// Profile built from J_n (smooth, defined at r = 0).
RadialProfile bessel_profile(const ElasticMedium& medium, double r);

struct ProfilePair {
  RadialProfile hankel;
  RadialProfile bessel;
};

/// Both profiles from a single set of Bessel evaluations. Requires r > 0.
ProfilePair radial_profiles(const ElasticMedium& medium, double r);

/// a(r) I + b(r) d d^T for the given profile.
CMat2 tensor_from_profile(const ElasticMedium& medium, const RadialProfile& p, const Vec2& d);

/// Generalized stress at y, applied to the rows of y -> G(x, y*), where
/// y* = y for mirror = +1 and y* is y reflected across a horizontal line for
/// mirror = -1. d = x - y*, n is the normal at y (any length; the result is
/// linear in n). Entry (j, k) is [P(G_j.)^T]_k.
CMat2 traction_from_profile(const ElasticMedium& medium, const RadialProfile& p, const Vec2& d,
                            const Vec2& n, int mirror);

/// Free-space Navier Green tensor. Throws std::domain_error for x == y.
CMat2 green_tensor(const ElasticMedium& medium, const Vec2& x, const Vec2& y);

/// Traction of the Green tensor at y(t) with the unit upward normal.
/// Throws std::domain_error for x == y(t).
CMat2 green_traction(const ElasticMedium& medium, const SurfaceProfile& surface, const Vec2& x,
                     double t);

/// Placeholder for the evanescent correction U of the Dirichlet half-space
/// tensor G_D = G(x, y) - G(x, y') + U(x, y). No kernel includes it.
struct HalfSpaceCorrection {
  static constexpr bool modelled = false;
};

/// Traction at y(t) of G(x, y'(t)) minus i eta G(x, y'(t)), y' the reflection
/// of y across x2 = h. Throws std::domain_error if x coincides with y'(t).
///
/// The half-space correction term of the Dirichlet Green tensor is not
/// modelled: the Dirichlet tensor is taken to be G(x, y) - G(x, y').
CMat2 image_combined(const ElasticMedium& medium, const SurfaceProfile& surface, const Vec2& x,
                     double t);

}  // namespace roughbie
