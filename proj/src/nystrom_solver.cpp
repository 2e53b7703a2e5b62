#include "roughbie/nystrom_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace roughbie {

namespace {

void assemble_rows(const KernelPair& kernels, const Discretization& disc, const LogWeightTable& w,
                   Eigen::MatrixXcd& out, std::size_t first, std::size_t stride) {
  const std::size_t k = disc.size();
  const double smooth = kPi / disc.N;
  for (std::size_t i = first; i < k; i += stride) {
    const double s = disc.knots[i];
    for (std::size_t j = 0; j < k; ++j) {
      const KernelValues kv = kernels.evaluate(s, disc.knots[j]);
      CMat2 block = smooth * kv.c;
      if (std::fabs(s - disc.knots[j]) < kPi) {
        block += w(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j)) * kv.b;
      }
      if (i == j) block += CMat2::Identity();
      out.block<2, 2>(2 * i, 2 * j) = block;
    }
  }
}

}  // namespace

Eigen::MatrixXcd assemble(const KernelPair& kernels, const Discretization& disc, unsigned threads) {
  const std::size_t k = disc.size();
  Eigen::MatrixXcd out(2 * k, 2 * k);
  const LogWeightTable weights(disc.N);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, k));
  if (threads <= 1) {
    assemble_rows(kernels, disc, weights, out, 0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned p = 0; p < threads; ++p) {
    pool.emplace_back([&, p] {
      try {
        assemble_rows(kernels, disc, weights, out, p, threads);
      } catch (...) {
        errors[p] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Density solve(const Eigen::MatrixXcd& system, const BoundaryData& data, const Discretization& disc,
              SolveReport* report) {
  const std::size_t k = disc.size();
  if (system.rows() != static_cast<Eigen::Index>(2 * k) || system.cols() != system.rows()) {
    throw std::invalid_argument("system size does not match the discretization");
  }
  Eigen::VectorXcd rhs(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    const CVec2 g = data(disc.knots[i]);
    if (!g.allFinite()) throw std::invalid_argument("boundary data is not finite");
    rhs.segment<2>(2 * i) = 2.0 * g;
  }

  Density density;
  density.disc = disc;
  density.values.assign(k, CVec2::Zero());
  const double rhs_norm = rhs.cwiseAbs().maxCoeff();
  if (rhs_norm == 0.0) {
    if (report) *report = {0.0, 1.0};
    return density;
  }

  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system);
  const double rcond = lu.rcond();
  if (!(rcond > 100.0 * std::numeric_limits<double>::epsilon())) {
    std::ostringstream msg;
    msg << "collocation matrix is numerically singular (reciprocal condition estimate " << rcond
        << "); check eta and the image level";
    throw std::runtime_error(msg.str());
  }
  Eigen::VectorXcd psi = lu.solve(rhs);
  double residual = (system * psi - rhs).cwiseAbs().maxCoeff() / rhs_norm;
  if (residual > 1e-12) {
    psi += lu.solve(rhs - system * psi);
    residual = (system * psi - rhs).cwiseAbs().maxCoeff() / rhs_norm;
  }
  if (!(residual <= 1e-10)) {
    std::ostringstream msg;
    msg << "linear solve residual " << residual << " exceeds 1e-10 (reciprocal condition "
        << rcond << ")";
    throw std::runtime_error(msg.str());
  }
  for (std::size_t i = 0; i < k; ++i) density.values[i] = psi.segment<2>(2 * i);
  if (report) *report = {residual, rcond};
  return density;
}

CVec2 interpolate_density(const Density& density, const KernelPair& kernels,
                          const BoundaryData& data, double s) {
  const Discretization& disc = density.disc;
  if (!(s >= disc.knots.front() && s <= disc.knots.back())) {
    throw std::out_of_range("interpolation point lies outside the knot window");
  }
  CVec2 acc = 2.0 * data(s);
  const double smooth = kPi / disc.N;
  for (std::size_t j = 0; j < disc.size(); ++j) {
    const double t = disc.knots[j];
    const KernelValues kv = kernels.evaluate(s, t);
    CMat2 alpha = smooth * kv.c;
    if (std::fabs(s - t) < kPi) alpha += log_weight(disc.N, s, t) * kv.b;
    acc -= alpha * density.values[j];
  }
  return acc;
}

}  // namespace roughbie
