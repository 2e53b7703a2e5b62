#include "roughbie/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace roughbie {

SurfaceProfile SurfaceProfile::with_image_level(double h) const {
  SurfaceProfile copy = *this;
  copy.image_level = h;
  return copy;
}

double SurfaceProfile::sampled_min(double a, double b, double step) const {
  double lo = std::numeric_limits<double>::infinity();
  const auto count = static_cast<long>(std::ceil((b - a) / step));
  for (long i = 0; i <= count; ++i) lo = std::min(lo, f(std::min(a + i * step, b)));
  return lo;
}

double SurfaceProfile::sampled_max(double a, double b, double step) const {
  double hi = -std::numeric_limits<double>::infinity();
  const auto count = static_cast<long>(std::ceil((b - a) / step));
  for (long i = 0; i <= count; ++i) hi = std::max(hi, f(std::min(a + i * step, b)));
  return hi;
}

void SurfaceProfile::check_window(double a, double b, double step) const {
  const auto count = static_cast<long>(std::ceil((b - a) / step));
  for (long i = 0; i <= count; ++i) {
    const double t = std::min(a + i * step, b);
    const double ft = f(t);
    if (!std::isfinite(ft) || !std::isfinite(df(t)) || !std::isfinite(ddf(t))) {
      throw std::invalid_argument("surface '" + name + "' is not finite at t = " + std::to_string(t));
    }
    if (!(image_level < ft)) {
      throw std::invalid_argument("image level h = " + std::to_string(image_level) +
                                  " is not below surface '" + name + "' at t = " + std::to_string(t));
    }
  }
}

namespace surfaces {

SurfaceProfile flat(double image_level) {
  SurfaceProfile s;
  s.name = "flat";
  s.f = [](double) { return 0.0; };
  s.df = [](double) { return 0.0; };
  s.ddf = [](double) { return 0.0; };
  s.smoothness_order = 1000;
  s.lower_bound = 0.0;
  s.deriv_bound = 0.0;
  s.image_level = image_level;
  return s;
}

SurfaceProfile periodic(double image_level) {
  constexpr double a1 = 0.6 * kPi;
  constexpr double a2 = 0.24 * kPi;
  constexpr double a3 = 1.5 * kPi;
  SurfaceProfile s;
  s.name = "periodic";
  s.f = [=](double x) {
    return 0.084 * std::sin(a1 * x) + 0.084 * std::sin(a2 * x) + 0.03 * std::sin(a3 * (x - 1.0));
  };
  s.df = [=](double x) {
    return 0.084 * a1 * std::cos(a1 * x) + 0.084 * a2 * std::cos(a2 * x) +
           0.03 * a3 * std::cos(a3 * (x - 1.0));
  };
  s.ddf = [=](double x) {
    return -0.084 * a1 * a1 * std::sin(a1 * x) - 0.084 * a2 * a2 * std::sin(a2 * x) -
           0.03 * a3 * a3 * std::sin(a3 * (x - 1.0));
  };
  s.smoothness_order = 1000;
  s.lower_bound = -(0.084 + 0.084 + 0.03);
  s.deriv_bound = 0.03 * a3 * a3 * a3 * a3 + 0.084 * a1 * a1 * a1 * a1 + 0.084;
  s.image_level = image_level;
  return s;
}

SurfaceProfile rough(double image_level) {
  SurfaceProfile s;
  s.name = "rough";
  s.f = [](double x) { return 0.1 * std::cos(0.1 * x * x) * std::exp(-std::sin(x)); };
  s.df = [](double x) {
    const double g = std::cos(0.1 * x * x);
    const double dg = -0.2 * x * std::sin(0.1 * x * x);
    const double e = std::exp(-std::sin(x));
    return 0.1 * e * (dg - g * std::cos(x));
  };
  s.ddf = [](double x) {
    const double sn = std::sin(0.1 * x * x);
    const double g = std::cos(0.1 * x * x);
    const double dg = -0.2 * x * sn;
    const double ddg = -0.2 * sn - 0.04 * x * x * g;
    const double e = std::exp(-std::sin(x));
    const double de = -std::cos(x) * e;
    const double dde = (std::sin(x) + std::cos(x) * std::cos(x)) * e;
    return 0.1 * (ddg * e + 2.0 * dg * de + g * dde);
  };
  // Derivatives grow with |x| through the chirp; bounded on any finite window.
  s.smoothness_order = 1000;
  s.lower_bound = -0.1 * std::exp(1.0);
  s.deriv_bound = std::numeric_limits<double>::infinity();
  s.image_level = image_level;
  return s;
}

SurfaceProfile by_name(const std::string& name, double image_level) {
  if (name == "flat") return flat(image_level);
  if (name == "periodic") return periodic(image_level);
  if (name == "rough") return rough(image_level);
  throw std::invalid_argument("unknown surface '" + name + "' (expected flat, periodic or rough)");
}

}  // namespace surfaces

double chord_slope(const SurfaceProfile& surface, double s, double t) {
  const double gap = s - t;
  if (std::fabs(gap) < kDefectGap) {
    return 0.5 * (surface.df(s) + surface.df(t)) - gap * (surface.ddf(s) - surface.ddf(t)) / 12.0;
  }
  return (surface.f(s) - surface.f(t)) / gap;
}

GeometryAt geometry(const SurfaceProfile& surface, double s, double t) {
  GeometryAt g;
  g.s = s;
  g.t = t;
  const double fs = surface.f(s);
  const double ft = surface.f(t);
  const double dft = surface.df(t);
  g.chord = Vec2(s - t, (s - t) * chord_slope(surface, s, t));
  g.chord_image = Vec2(s - t, fs + ft - 2.0 * surface.image_level);
  g.r = g.chord.norm();
  g.r_image = g.chord_image.norm();
  g.jacobian_t = std::sqrt(1.0 + dft * dft);
  g.l_t = Vec2(-dft, 1.0);
  g.nu_t = g.l_t / g.jacobian_t;
  g.l_perp_t = perp(g.l_t);
  return g;
}

double r_ratio(const SurfaceProfile& surface, double s, double t) {
  const double m = chord_slope(surface, s, t);
  return std::sqrt(1.0 + m * m);
}

double xi(const SurfaceProfile& surface, double s, double t) {
  const double gap = s - t;
  const double m = chord_slope(surface, s, t);
  const double denom = 1.0 + m * m;
  if (std::fabs(gap) < kCurvatureGap) return -(surface.ddf(s) / 6.0 + surface.ddf(t) / 3.0) / denom;
  if (std::fabs(gap) < kDefectGap) {
    // f(s) - f(t) - gap f'(t) = gap/2 (f'(s) - f'(t)) + gap^2/12 (f''(t) - f''(s)) + O(gap^5)
    const double defect_over_gap2 =
        0.5 * (surface.df(s) - surface.df(t)) / gap + (surface.ddf(t) - surface.ddf(s)) / 12.0;
    return -defect_over_gap2 / denom;
  }
  const double num = gap * surface.df(t) + surface.f(t) - surface.f(s);
  return num / (gap * gap * denom);
}

RMat2 zeta(const SurfaceProfile& surface, double s, double t) {
  const double m = chord_slope(surface, s, t);
  const double denom = 1.0 + m * m;
  RMat2 z;
  z << 1.0 / denom, m / denom, m / denom, m * m / denom;
  return z;
}

}  // namespace roughbie
