#pragma once

#include <complex>

#include <Eigen/Core>

namespace roughbie {

using Complex = std::complex<double>;

using Vec2 = Eigen::Vector2d;
using CVec2 = Eigen::Vector2cd;
using CMat2 = Eigen::Matrix2cd;
using RMat2 = Eigen::Matrix2d;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kI{0.0, 1.0};

/// 90-degree clockwise rotation used throughout: v^perp = (v2, -v1).
inline Vec2 perp(const Vec2& v) { return {v.y(), -v.x()}; }

}  // namespace roughbie
