#pragma once

#include <functional>
#include <string>

#include "roughbie/types.hpp"

namespace roughbie {

/// Graph surface x2 = f(x1) together with the image line x2 = h below it.
///
/// Profiles are analytic: the kernels need f, f' and f''. The image level
/// must satisfy h < inf f on every window the solver touches; see
/// check_window().
struct SurfaceProfile {
  using Fn = std::function<double(double)>;

  std::string name;
  Fn f;
  Fn df;
  Fn ddf;
  int smoothness_order = 0;  ///< the profile is C^(n+2)
  double lower_bound = 0.0;  ///< c with inf f >= c
  double deriv_bound = 0.0;  ///< M bounding f and its first n+2 derivatives
  double image_level = -1.0; ///< h

  Vec2 point(double t) const { return {t, f(t)}; }
  Vec2 image_point(double t) const { return {t, 2.0 * image_level - f(t)}; }

  /// Copy with a different image level.
  SurfaceProfile with_image_level(double h) const;

  /// Smallest f sampled on [a, b] with the given spacing.
  double sampled_min(double a, double b, double step) const;
  double sampled_max(double a, double b, double step) const;

  /// Throws std::invalid_argument unless h < f and f, f', f'' are finite at
  /// every sample of [a, b].
  void check_window(double a, double b, double step) const;
};

namespace surfaces {

SurfaceProfile flat(double image_level = -1.0);

/// 0.084 sin(0.6 pi x) + 0.084 sin(0.24 pi x) + 0.03 sin(1.5 pi (x - 1))
SurfaceProfile periodic(double image_level);

/// 0.1 cos(0.1 x^2) exp(-sin x)
SurfaceProfile rough(double image_level);

/// Lookup of the built-in profiles by name ("flat", "periodic", "rough").
SurfaceProfile by_name(const std::string& name, double image_level);

}  // namespace surfaces

/// Geometry of the pair x(s) = (s, f(s)), y(t) = (t, f(t)).
struct GeometryAt {
  double s = 0.0;
  double t = 0.0;
  Vec2 chord;        ///< x(s) - y(t)
  Vec2 chord_image;  ///< x(s) - y'(t), y' the reflection across x2 = h
  double r = 0.0;
  double r_image = 0.0;
  Vec2 nu_t;         ///< upward unit normal at y(t)
  Vec2 l_t;          ///< jacobian_t * nu_t = (-f'(t), 1)
  Vec2 l_perp_t;     ///< perp(l_t) = (1, f'(t))
  double jacobian_t = 1.0;
};

/// Below this gap the chord slope and the numerator of xi are built from f'
/// and f'' at both ends (exact through fourth order).
inline constexpr double kDefectGap = 1e-3;
/// Below this gap xi uses f'' alone: -(f''(s)/6 + f''(t)/3) / (1 + m^2).
inline constexpr double kCurvatureGap = 1e-6;

GeometryAt geometry(const SurfaceProfile& surface, double s, double t);

/// (f(s) - f(t)) / (s - t), from end-point derivatives within kDefectGap.
double chord_slope(const SurfaceProfile& surface, double s, double t);

/// r / |s - t|; sqrt(1 + f'(s)^2) on the diagonal.
double r_ratio(const SurfaceProfile& surface, double s, double t);

/// ((s - t) f'(t) + f(t) - f(s)) / r^2; -f''/(2(1 + f'^2)) on the diagonal.
double xi(const SurfaceProfile& surface, double s, double t);

/// Outer product of the unit chord; (1, f')(1, f')^T / (1 + f'^2) on the diagonal.
RMat2 zeta(const SurfaceProfile& surface, double s, double t);

}  // namespace roughbie
