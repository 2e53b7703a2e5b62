#pragma once

#include <variant>

#include "roughbie/navier_green.hpp"
#include "roughbie/nystrom_solver.hpp"
#include "roughbie/quadrature.hpp"
#include "roughbie/surface.hpp"
#include "roughbie/types.hpp"

namespace roughbie {

/// theta e^{i kp x.theta}
struct PlaneP {
  Vec2 theta{0.0, -1.0};
};

/// theta^perp e^{i ks x.theta}
struct PlaneS {
  Vec2 theta{0.0, -1.0};
};

/// G(x, z) q
struct PointSource {
  Vec2 z{0.0, -3.0};
  Vec2 q{0.6, 0.8};
};

/// alpha PlaneP + beta PlaneS with a common direction
struct Combined {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
  Vec2 theta{0.0, -1.0};
};

using IncidentField = std::variant<PlaneP, PlaneS, PointSource, Combined>;

/// Throws std::invalid_argument for a non-unit direction and
/// std::domain_error at the source point.
CVec2 incident_eval(const IncidentField& field, const ElasticMedium& medium, const Vec2& x);

enum class ReferenceSolution {
  flat_plane_p,  ///< reflection of PlaneP{(0, -1)} by x2 = 0
  flat_plane_s,  ///< reflection of PlaneS{(0, -1)} by x2 = 0
  point_source,  ///< -G(x, z) q, for a source below the surface
};

CVec2 exact_scattered(ReferenceSolution kind, const ElasticMedium& medium, const Vec2& x,
                      const PointSource& source = {});

/// Scattered field from the combined layer potential, discretized with the
/// pi/N rule. x must lie strictly above the surface; throws std::domain_error
/// otherwise.
CVec2 scattered_eval(const ElasticMedium& medium, const SurfaceProfile& surface,
                     const Discretization& disc, const Density& density, const Vec2& x);

}  // namespace roughbie
