#pragma once

#include <functional>
#include <vector>

#include "cheb/cheb.hpp"
#include "core/real_function.hpp"
#include "core/sup_search.hpp"

namespace grunwald {

/// The shifted interpolation mean of order n applied to samples of f at the
/// Chebyshev angles:
///     G_n(f)(theta) = 1/2 sum_k f(theta_k) [P_k(theta - h) + P_k(theta + h)].
/// theta must lie in [0, pi].
double apply_interp_mean(const ChebyshevGrid& grid,
                         const std::function<double(double)>& f,
                         double theta);

/// Extension of the mean to all of R by translating the node pattern:
/// on [j pi, (j+1) pi] the nodes are theta_k + j pi and the fundamental
/// factors are shifted accordingly.  Continuous across the seam angles j pi.
double apply_interp_mean_extended(const ChebyshevGrid& grid,
                                  const std::function<double(double)>& f,
                                  double theta);

/// Pointwise absolute row sum  Lambda_n(theta) = 1/2 sum_k |pair_k(theta)|;
/// its sup over [0, pi] is the operator norm on C[0, pi].
double lebesgue_function(const ChebyshevGrid& grid, double theta);

/// sup of lebesgue_function over [0, pi] (grid scan + golden polish).
SupResult operator_norm(const ChebyshevGrid& grid, double grid_step);

/// Rate functional in the cosine metric:
///     nu_n = sup_theta 1/2 sum_k |cos theta_k - cos theta| |pair_k(theta)|.
double nu_rate(const ChebyshevGrid& grid, double grid_step);

/// Rate functional in the angle metric:
///     xi_n = 1/2 sup_eta sum_k |theta_k - eta| |pair_k(eta)|.
double xi_rate(const ChebyshevGrid& grid, double grid_step);

/// Which quantitative error bound to evaluate.
enum class BoundFlavor {
  /// f defined on [-1, 1], composed with cos; modulus at nu_n:
  ///   sup |G_n(f o cos) - f o cos| <= (c1 + 1) w(f, nu_n).
  kCosComposed,
  /// f defined on [0, pi]; modulus at xi_n:
  ///   sup |G_n(f) - f| <= (c1 + 1) w(f, xi_n).
  kAngleDirect,
  /// f in C^1[0, pi]; derivative form:
  ///   sup |G_n(f) - f| <= ||f'|| xi_n + 2 pi (c1 + 1) w(f', xi_n).
  kAngleDerivative,
};

struct BoundReport {
  double lhs = 0.0;    // measured sup error
  double rhs = 0.0;    // bound evaluated with the given c1
  double delta = 0.0;  // rate functional used (nu_n or xi_n)
  bool holds = false;  // lhs <= rhs
};

/// Evaluate one quantitative bound; c1 is the norm constant in
/// ||G_n|| <= c1 (see lebesgue_constant_estimate).  kAngleDerivative requires
/// f.derivative.
BoundReport quantitative_bound_report(const ChebyshevGrid& grid,
                                      BoundFlavor flavor,
                                      const RealFunction& f, double c1,
                                      double grid_step);

/// A point where the mean of a nonnegative function is negative.
struct Witness {
  double theta = 0.0;
  double value = 0.0;
};

/// Global scan for a negativity witness: applies the mean to the nonnegative
/// triangular hat centered at the last node (half-width pi/n, so it vanishes
/// at every other node) and searches [0, pi] for a negative value.  Throws
/// WitnessNotFoundError when the scan finds none (e.g. n = 1, where the mean
/// is positive).
Witness nonpositivity_witness(const ChebyshevGrid& grid,
                              double grid_step = 1e-4);

/// Convergence diagnostics of the mean on the functions {1, cos, cos^2}:
///   err_one     = sup |G_n(1) - 1|                      (exactly 0),
///   err_cos     = sup |G_n(cos) - cos|                  (= 1 - cos(h)),
///   err_cos_sq  = sup |G_n(cos^2) - cos^2|,
///   residual    = sup |G_n(cos)(t) - cos(t) cos(h)|     (exact identity).
struct ConvergenceRow {
  int n = 0;
  double err_one = 0.0;
  double err_cos = 0.0;
  double err_cos_sq = 0.0;
  double residual_identity = 0.0;
};
std::vector<ConvergenceRow> convergence_report(const std::vector<int>& orders,
                                               double grid_step);

/// Operator norms over a set of orders plus the running maximum, used to
/// estimate the uniform norm constant c1.
struct NormSweep {
  std::vector<int> orders;
  std::vector<double> norms;
  double c1 = 0.0;  // max over the sweep
};
NormSweep norm_sweep(const std::vector<int>& orders, double grid_step);

}  // namespace grunwald
