#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "roughbie/surface.hpp"

using namespace roughbie;

namespace {

SurfaceProfile custom(SurfaceProfile::Fn f, SurfaceProfile::Fn df, SurfaceProfile::Fn ddf,
                      double h = -10.0) {
  SurfaceProfile s;
  s.name = "custom";
  s.f = std::move(f);
  s.df = std::move(df);
  s.ddf = std::move(ddf);
  s.image_level = h;
  return s;
}

SurfaceProfile parabola() {
  return custom([](double t) { return t * t; }, [](double t) { return 2.0 * t; },
                [](double) { return 2.0; }, -1.0);
}

SurfaceProfile sine() {
  return custom([](double t) { return std::sin(t); }, [](double t) { return std::cos(t); },
                [](double t) { return -std::sin(t); }, -2.0);
}

SurfaceProfile line() {
  return custom([](double t) { return t; }, [](double) { return 1.0; }, [](double) { return 0.0; });
}

// Richardson extrapolation of the off-diagonal values at eps, eps/10, eps/100
// assuming an error expansion a1 eps + a2 eps^2.
double richardson3(const std::function<double(double)>& g, double eps) {
  const double a = g(eps), b = g(eps / 10.0), c = g(eps / 100.0);
  const double ab = (10.0 * b - a) / 9.0;
  const double bc = (10.0 * c - b) / 9.0;
  return (100.0 * bc - ab) / 99.0;
}

}  // namespace

TEST(SurfaceExamples, FlatGeometry) {
  const auto s = surfaces::flat(-1.0);
  const auto g = geometry(s, 0.0, 3.0);
  EXPECT_EQ(g.r, 3.0);
  EXPECT_EQ(g.nu_t, Vec2(0.0, 1.0));
  EXPECT_EQ(g.jacobian_t, 1.0);
  EXPECT_EQ(geometry(s, 0.0, 0.0).r_image, 2.0);
  EXPECT_EQ(geometry(s, 0.0, 0.0).r, 0.0);
}

TEST(SurfaceExamples, ParabolaChord) {
  EXPECT_NEAR(geometry(parabola(), 0.0, 1.0).r, std::sqrt(2.0), 1e-15);
}

TEST(SurfaceExamples, RRatio) {
  EXPECT_EQ(r_ratio(surfaces::flat(), 0.3, 2.0), 1.0);
  EXPECT_EQ(r_ratio(surfaces::flat(), -4.0, 1.0), 1.0);
  EXPECT_NEAR(r_ratio(parabola(), 0.7, 0.7), std::sqrt(1.0 + 1.96), 1e-15);
  // chord slope (sin(1e-6) - 0)/1e-6 = 1 - O(1e-12), so r/|s-t| is sqrt(2) to within 1e-6
  EXPECT_NEAR(r_ratio(sine(), 0.0, 1e-6), std::sqrt(2.0), 1e-6);
}

TEST(SurfaceExamples, Xi) {
  const auto flat = surfaces::flat();
  EXPECT_EQ(xi(flat, 0.0, 0.0), 0.0);
  EXPECT_EQ(xi(flat, 1.0, -2.0), 0.0);
  EXPECT_NEAR(xi(parabola(), 0.0, 0.0), -1.0, 1e-15);
  const double diag = -(-std::sin(0.1)) / (2.0 * (1.0 + std::cos(0.1) * std::cos(0.1)));
  EXPECT_NEAR(xi(sine(), 0.1, 0.1), diag, 1e-15);
  EXPECT_NEAR(xi(sine(), 0.1, 0.1 + 1e-5), diag, 1e-4);
}

TEST(SurfaceExamples, Zeta) {
  const RMat2 z0 = zeta(surfaces::flat(), 0.0, 0.0);
  EXPECT_EQ(z0(0, 0), 1.0);
  EXPECT_EQ(z0(0, 1), 0.0);
  EXPECT_EQ(z0(1, 1), 0.0);
  const RMat2 zl = zeta(line(), 2.0, 2.0);
  EXPECT_NEAR(zl(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(zl(0, 1), 0.5, 1e-15);
  EXPECT_NEAR(zl(1, 0), 0.5, 1e-15);
  EXPECT_NEAR(zl(1, 1), 0.5, 1e-15);
}

TEST(SurfaceExamples, NamedProfiles) {
  const auto p = surfaces::periodic(-1.0);
  const double x = 0.37;
  EXPECT_NEAR(p.f(x),
              0.084 * std::sin(0.6 * kPi * x) + 0.084 * std::sin(0.24 * kPi * x) +
                  0.03 * std::sin(1.5 * kPi * (x - 1.0)),
              1e-16);
  const auto r = surfaces::rough(-1.0);
  EXPECT_NEAR(r.f(x), 0.1 * std::cos(0.1 * x * x) * std::exp(-std::sin(x)), 1e-16);
  EXPECT_EQ(surfaces::by_name("flat", -1.0).f(3.0), 0.0);
  EXPECT_THROW(surfaces::by_name("wavy", -1.0), std::invalid_argument);
}

TEST(SurfaceExamples, DerivativesMatchFiniteDifferences) {
  const double step = 1e-4;
  for (const auto& s : {surfaces::periodic(-1.0), surfaces::rough(-1.0)}) {
    for (double t : {-7.0, -1.3, 0.0, 0.4, 2.9, 11.0}) {
      const double d1 = (s.f(t + step) - s.f(t - step)) / (2.0 * step);
      const double d2 = (s.df(t + step) - s.df(t - step)) / (2.0 * step);
      EXPECT_NEAR(s.df(t), d1, 1e-7) << s.name << " t=" << t;
      EXPECT_NEAR(s.ddf(t), d2, 1e-7) << s.name << " t=" << t;
    }
  }
}

TEST(SurfaceErrors, WindowCheck) {
  EXPECT_NO_THROW(surfaces::flat(-1.0).check_window(-5.0, 5.0, 0.1));
  EXPECT_THROW(surfaces::flat(0.0).check_window(-5.0, 5.0, 0.1), std::invalid_argument);
  EXPECT_THROW(surfaces::rough(0.0).check_window(-10.0 * kPi, 10.0 * kPi, 0.01),
               std::invalid_argument);
  auto bad = custom([](double t) { return 1.0 / t; }, [](double t) { return -1.0 / (t * t); },
                    [](double t) { return 2.0 / (t * t * t); });
  EXPECT_THROW(bad.check_window(-1.0, 1.0, 0.5), std::invalid_argument);
}

TEST(SurfaceProperties, GeometryInvariants) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-12.0, 12.0);
  for (const auto& s : {surfaces::periodic(-1.0), surfaces::rough(-1.0), sine(), parabola()}) {
    for (int i = 0; i < 300; ++i) {
      const double a = u(rng), b = u(rng);
      const auto g = geometry(s, a, b);
      EXPECT_NEAR(g.nu_t.norm(), 1.0, 1e-15);
      EXPECT_GT(g.nu_t.y(), 0.0);
      EXPECT_LE((g.l_t - g.jacobian_t * g.nu_t).norm(), 1e-14 * g.jacobian_t);
      EXPECT_EQ(g.l_perp_t, perp(g.l_t));
      EXPECT_NEAR(g.r, std::hypot(a - b, s.f(a) - s.f(b)), 1e-14 * (1.0 + g.r));
      EXPECT_NEAR(g.r_image, std::hypot(a - b, s.f(a) + s.f(b) - 2.0 * s.image_level),
                  1e-14 * (1.0 + g.r_image));
      EXPECT_GT(g.r, 0.0);
      const RMat2 z = zeta(s, a, b);
      EXPECT_NEAR(z.trace(), 1.0, 1e-14);
      EXPECT_NEAR((z - z.transpose()).norm(), 0.0, 1e-15);
      const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<RMat2>(z).eigenvalues();
      EXPECT_NEAR(ev(0), 0.0, 1e-14);
      EXPECT_NEAR(ev(1), 1.0, 1e-14);
    }
  }
}

TEST(SurfaceProperties, ImageDistanceLowerBound) {
  const auto flat = surfaces::flat(-1.0);
  double lo = 1e300;
  for (double a = -5.0; a <= 5.0; a += 0.25)
    for (double b = -5.0; b <= 5.0; b += 0.25) lo = std::min(lo, geometry(flat, a, b).r_image);
  EXPECT_GE(lo, 2.0 * (0.0 - (-1.0)) * (1.0 - 1e-12));

  for (const auto& s : {surfaces::periodic(-0.7), surfaces::rough(-0.7)}) {
    double m = 1e300;
    for (double a = -30.0; a <= 30.0; a += 0.1)
      for (double b = a - 3.0; b <= a + 3.0; b += 0.1) m = std::min(m, geometry(s, a, b).r_image);
    EXPECT_GT(m, 0.0);
  }
}

TEST(SurfaceProperties, DiagonalLimitsByRichardson) {
  for (const auto& s : {surfaces::periodic(-1.0), surfaces::rough(-1.0), sine()}) {
    for (double t : {-2.2, 0.3, 1.7}) {
      auto rr = [&](double e) { return r_ratio(s, t + e, t); };
      auto xx = [&](double e) { return xi(s, t + e, t); };
      EXPECT_NEAR(richardson3(rr, 1e-2), r_ratio(s, t, t), 1e-6) << s.name;
      EXPECT_NEAR(richardson3(xx, 1e-2), xi(s, t, t), 1e-6) << s.name;
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          auto zz = [&](double e) { return zeta(s, t + e, t)(j, k); };
          EXPECT_NEAR(richardson3(zz, 1e-2), zeta(s, t, t)(j, k), 1e-6) << s.name;
        }
      }
      // unextrapolated values approach the limit at first order
      EXPECT_NEAR(xx(1e-4), xi(s, t, t), 1e-3);
    }
  }
}

TEST(SurfaceProperties, XiContinuousAcrossSwitches) {
  for (const auto& s : {surfaces::periodic(-1.0), surfaces::rough(-1.0), sine()}) {
    for (double t : {-1.0, 0.6}) {
      for (double gap : {kDefectGap, -kDefectGap, kCurvatureGap, -kCurvatureGap}) {
        const double below = xi(s, t + gap * (1.0 - 1e-9), t);
        const double above = xi(s, t + gap * (1.0 + 1e-9), t);
        EXPECT_NEAR(below, above, 1e-8) << s.name << " gap=" << gap;
        const double rb = r_ratio(s, t + gap * (1.0 - 1e-9), t);
        const double ra = r_ratio(s, t + gap * (1.0 + 1e-9), t);
        EXPECT_NEAR(rb, ra, 1e-9);
      }
    }
  }
}
