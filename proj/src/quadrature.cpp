#include "roughbie/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace roughbie {

Discretization make_discretization(double cut, int N) {
  if (N < 1) throw std::invalid_argument("N must be at least 1, got " + std::to_string(N));
  if (!std::isfinite(cut) || !(cut > 0.0)) throw std::invalid_argument("cut must be positive");
  const double intervals = 2.0 * N * cut / kPi;
  const double rounded = std::round(intervals);
  if (std::fabs(intervals - rounded) > 1e-9 * std::max(1.0, rounded) || rounded < 1.0) {
    throw std::invalid_argument("2 N cut / pi must be an integer (cut = " + std::to_string(cut) +
                                ", N = " + std::to_string(N) + ")");
  }
  const auto n = static_cast<long>(rounded);
  Discretization d;
  d.cut = cut;
  d.N = N;
  d.step = kPi / N;
  d.knots.resize(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    d.knots[static_cast<std::size_t>(j)] = static_cast<double>(2 * j - n) * kPi / (2.0 * N);
  }
  return d;
}

double log_weight(int N, double s, double t_j) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  const double u = s - t_j;
  double sum = 0.0;
  for (int m = 1; m < N; ++m) sum += std::cos(m * u) / m;
  sum += std::cos(N * u) / (2.0 * N);
  return -sum / N;
}

LogWeightTable::LogWeightTable(int N) : n_(N), values_(2 * static_cast<std::size_t>(N)) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  for (int k = 0; k < 2 * N; ++k) values_[static_cast<std::size_t>(k)] = log_weight(N, k * kPi / N, 0.0);
}

double LogWeightTable::operator()(std::ptrdiff_t i, std::ptrdiff_t j) const {
  const std::ptrdiff_t period = 2 * n_;
  std::ptrdiff_t k = (i - j) % period;
  if (k < 0) k += period;
  return values_[static_cast<std::size_t>(k)];
}

namespace {

template <class T>
T log_rule(int N, double s, const std::vector<double>& knots, const std::vector<T>& samples) {
  if (knots.size() != samples.size()) throw std::invalid_argument("one sample per knot required");
  T acc = samples.empty() ? T{} : T(samples[0] * 0.0);
  for (std::size_t j = 0; j < knots.size(); ++j) acc += log_weight(N, s, knots[j]) * samples[j];
  return acc;
}

template <class T>
T smooth_rule(int N, const std::vector<double>& knots, const std::vector<T>& samples) {
  if (knots.size() != samples.size()) throw std::invalid_argument("one sample per knot required");
  T acc = samples.empty() ? T{} : T(samples[0] * 0.0);
  for (const T& v : samples) acc += v;
  return (kPi / N) * acc;
}

}  // namespace

CVec2 apply_log_rule(int N, double s, const std::vector<double>& knots,
                     const std::vector<CVec2>& samples) {
  if (samples.empty()) return CVec2::Zero();
  return log_rule(N, s, knots, samples);
}

Complex apply_log_rule(int N, double s, const std::vector<double>& knots,
                       const std::vector<Complex>& samples) {
  return log_rule(N, s, knots, samples);
}

CVec2 apply_smooth_rule(int N, const std::vector<double>& knots, const std::vector<CVec2>& samples) {
  if (samples.empty()) return CVec2::Zero();
  return smooth_rule(N, knots, samples);
}

Complex apply_smooth_rule(int N, const std::vector<double>& knots,
                          const std::vector<Complex>& samples) {
  return smooth_rule(N, knots, samples);
}

}  // namespace roughbie
