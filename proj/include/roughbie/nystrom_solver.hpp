#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "roughbie/kernel_split.hpp"
#include "roughbie/quadrature.hpp"
#include "roughbie/types.hpp"

namespace roughbie {

/// s -> g(x(s)), the Dirichlet data pulled back to the parameter line.
using BoundaryData = std::function<CVec2(double)>;

/// Boundary density sampled at the knots.
struct Density {
  Discretization disc;
  std::vector<CVec2> values;
};

/// Dense collocation matrix: block (i, j) is
///   delta_ij I + R_j(t_i) B(t_i, t_j) + (pi/N) C(t_i, t_j).
/// Rows are distributed over `threads` workers (0 picks the hardware count);
/// the result does not depend on the thread count.
Eigen::MatrixXcd assemble(const KernelPair& kernels, const Discretization& disc,
                          unsigned threads = 0);

struct SolveReport {
  double residual = 0.0;  ///< ||A psi - b||_inf / ||b||_inf
  double rcond = 0.0;     ///< reciprocal condition estimate of the LU factors
};

/// Solves system * psi = 2 g(t_i). Throws std::runtime_error when the LU
/// factors are numerically singular or the residual exceeds 1e-10.
Density solve(const Eigen::MatrixXcd& system, const BoundaryData& data, const Discretization& disc,
              SolveReport* report = nullptr);

/// Nystrom interpolant psi(s) = 2 g(s) - sum_j alpha_j(s) psi(t_j).
/// Throws std::out_of_range outside [-cut, cut].
CVec2 interpolate_density(const Density& density, const KernelPair& kernels,
                          const BoundaryData& data, double s);

}  // namespace roughbie
