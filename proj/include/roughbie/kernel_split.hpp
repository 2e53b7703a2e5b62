#pragma once

#include "roughbie/navier_green.hpp"
#include "roughbie/surface.hpp"
#include "roughbie/types.hpp"

namespace roughbie {

/// Smooth cutoff: 1 on [-1, 1], 0 outside (-pi, pi).
double chi(double u);

/// ln(sin(u/2) / (u/2)) for |u| < 2 pi, 0 at u = 0.
double log_sinc_half(double u);

/// Pieces of a kernel with a logarithmic diagonal singularity: K = b ln|s - t| + c.
struct LogSplit {
  CMat2 b;
  CMat2 c;
};

enum class SplitBranch {
  automatic,  ///< closed form on the diagonal, series near it, Hankel values elsewhere
  direct,     ///< c = K - b ln|s - t| from Hankel values; s != t only
  series,     ///< log-regularized combinations; valid for any s, t
};

/// |s - t| below which the log-regularized combinations replace direct
/// Hankel evaluation.
double series_threshold(const ElasticMedium& medium);

/// Single-layer kernel 2 G(x(s), y(t)) J(t). Throws std::domain_error for s == t.
CMat2 kernel_A1(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t);

/// Double-layer kernel 2 [P G(x(s), .)](y(t)) J(t). Throws std::domain_error for s == t.
CMat2 kernel_A2(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t);

/// Image kernel 2 image_combined(x(s), t) J(t); smooth everywhere.
CMat2 kernel_A3(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t);

LogSplit kernel_B1_C1(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t,
                      SplitBranch branch = SplitBranch::automatic);

LogSplit kernel_B2_C2(const ElasticMedium& medium, const SurfaceProfile& surface, double s, double t,
                      SplitBranch branch = SplitBranch::automatic);

/// Closed-form diagonal values.
CMat2 diagonal_B1(const ElasticMedium& medium, const SurfaceProfile& surface, double s);
CMat2 diagonal_C1(const ElasticMedium& medium, const SurfaceProfile& surface, double s);
CMat2 diagonal_C2(const ElasticMedium& medium, const SurfaceProfile& surface, double s);

/// B and C at one (s, t).
struct KernelValues {
  CMat2 b;
  CMat2 c;
};

/// The full kernel of the boundary operator written as
///   A(s, t) = (1/2pi) ln(4 sin^2((s - t)/2)) B(s, t) + C(s, t),
/// with B supported in |s - t| < pi.
class KernelPair {
 public:
  KernelPair(ElasticMedium medium, SurfaceProfile surface);

  KernelValues evaluate(double s, double t) const;
  CMat2 B(double s, double t) const { return evaluate(s, t).b; }
  CMat2 C(double s, double t) const { return evaluate(s, t).c; }

  /// -i eta A1 + A2 - A3 at s != t. Below the series threshold the value is
  /// rebuilt from B and C.
  CMat2 full(double s, double t) const;

  const ElasticMedium& medium() const { return medium_; }
  const SurfaceProfile& surface() const { return surface_; }

 private:
  ElasticMedium medium_;
  SurfaceProfile surface_;
};

KernelPair kernel_pair(const ElasticMedium& medium, const SurfaceProfile& surface);

}  // namespace roughbie
