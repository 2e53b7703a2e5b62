#pragma once

#include <cstddef>
#include <vector>

#include "roughbie/types.hpp"

namespace roughbie {

/// Equidistant knots t_j = -cut + j pi/N, j = 0..2N cut/pi, endpoints included.
struct Discretization {
  double cut = 0.0;
  int N = 0;
  double step = 0.0;
  std::vector<double> knots;

  std::size_t size() const { return knots.size(); }
};

/// Throws std::invalid_argument unless N >= 1 and 2N cut/pi is a positive integer.
Discretization make_discretization(double cut, int N);

/// R_j(s) = -(1/N) [sum_{m=1}^{N-1} cos(m(s - t_j))/m + cos(N(s - t_j))/(2N)].
double log_weight(int N, double s, double t_j);

/// Values of log_weight at knot pairs; R_j(t_i) depends only on (i - j) mod 2N.
class LogWeightTable {
 public:
  explicit LogWeightTable(int N);

  double operator()(std::ptrdiff_t i, std::ptrdiff_t j) const;

 private:
  int n_;
  std::vector<double> values_;
};

/// sum_j R_j(s) samples[j]
CVec2 apply_log_rule(int N, double s, const std::vector<double>& knots,
                     const std::vector<CVec2>& samples);
Complex apply_log_rule(int N, double s, const std::vector<double>& knots,
                       const std::vector<Complex>& samples);

/// (pi/N) sum_j samples[j]
CVec2 apply_smooth_rule(int N, const std::vector<double>& knots, const std::vector<CVec2>& samples);
Complex apply_smooth_rule(int N, const std::vector<double>& knots,
                          const std::vector<Complex>& samples);

}  // namespace roughbie
