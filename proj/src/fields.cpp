#include "roughbie/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace roughbie {

namespace {

void check_unit(const Vec2& theta) {
  if (std::fabs(theta.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("incident direction must be a unit vector");
  }
}

CVec2 plane_p(const ElasticMedium& m, const Vec2& theta, const Vec2& x) {
  return theta.cast<Complex>() * std::exp(kI * (m.kappa_p * x.dot(theta)));
}

CVec2 plane_s(const ElasticMedium& m, const Vec2& theta, const Vec2& x) {
  return perp(theta).cast<Complex>() * std::exp(kI * (m.kappa_s * x.dot(theta)));
}

}  // namespace

CVec2 incident_eval(const IncidentField& field, const ElasticMedium& medium, const Vec2& x) {
  if (const auto* p = std::get_if<PlaneP>(&field)) {
    check_unit(p->theta);
    return plane_p(medium, p->theta, x);
  }
  if (const auto* s = std::get_if<PlaneS>(&field)) {
    check_unit(s->theta);
    return plane_s(medium, s->theta, x);
  }
  if (const auto* c = std::get_if<Combined>(&field)) {
    check_unit(c->theta);
    return c->alpha * plane_p(medium, c->theta, x) + c->beta * plane_s(medium, c->theta, x);
  }
  const auto& src = std::get<PointSource>(field);
  if (x == src.z) throw std::domain_error("point source evaluated at its own location");
  return green_tensor(medium, x, src.z) * src.q.cast<Complex>();
}

CVec2 exact_scattered(ReferenceSolution kind, const ElasticMedium& medium, const Vec2& x,
                      const PointSource& source) {
  switch (kind) {
    case ReferenceSolution::flat_plane_p:
      return {0.0, std::exp(kI * (medium.kappa_p * x.y()))};
    case ReferenceSolution::flat_plane_s:
      return {std::exp(kI * (medium.kappa_s * x.y())), 0.0};
    case ReferenceSolution::point_source:
      break;
  }
  return -(green_tensor(medium, x, source.z) * source.q.cast<Complex>());
}

CVec2 scattered_eval(const ElasticMedium& medium, const SurfaceProfile& surface,
                     const Discretization& disc, const Density& density, const Vec2& x) {
  if (density.values.size() != disc.size()) {
    throw std::invalid_argument("density does not match the discretization");
  }
  if (!(x.y() > surface.f(x.x()))) {
    throw std::domain_error("field evaluation point must lie strictly above the surface");
  }
  CVec2 acc = CVec2::Zero();
  for (std::size_t j = 0; j < disc.size(); ++j) {
    const double t = disc.knots[j];
    const double dft = surface.df(t);
    const double jac = std::sqrt(1.0 + dft * dft);
    const CMat2 kernel = green_traction(medium, surface, x, t) -
                         kI * medium.eta * green_tensor(medium, x, surface.point(t)) -
                         image_combined(medium, surface, x, t);
    acc += jac * (kernel * density.values[j]);
  }
  return (kPi / disc.N) * acc;
}

}  // namespace roughbie
