#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "core/errors.hpp"
#include "core/interval.hpp"

namespace grunwald {

/// Quadrature rule selector.
///  - kAdaptiveSimpson: classic adaptive Simpson with Richardson correction;
///    good general-purpose default for smooth or piecewise-smooth integrands.
///  - kGaussComposite: composite Gauss-Legendre panels sized from an
///    oscillation-frequency hint; the right tool for integrands of the form
///    (trig polynomial) * e^{i x t}.
enum class QuadRule {
  kAdaptiveSimpson,
  kGaussComposite,
};

struct QuadratureSpec {
  QuadRule rule = QuadRule::kAdaptiveSimpson;
  double abs_tol = 1e-10;
  /// Adaptive Simpson: maximum recursion depth.  Deep enough that integrable
  /// kinks (|g| across a simple zero of smooth g) still converge at tight
  /// tolerances; genuine jump discontinuities never converge and must be
  /// handled by splitting the range at the jump.
  /// Gauss composite: maximum number of panel-doubling rounds (capped at 16
  /// internally, since panel counts grow geometrically).
  int max_refinement = 48;
  /// Largest angular frequency (radians per unit of the integration variable)
  /// present in the integrand; 0 means "no oscillation hint".
  double oscillation_freq = 0.0;
  /// Minimum Gauss panels per oscillation period.
  int panels_per_period = 8;
  /// Gauss-Legendre points per panel (anything in [2, 64]).
  int gauss_points = 32;
};

/// Integrate f over [a, b].  Throws InvalidArgumentError if a > b or the spec
/// is malformed, EvaluationError on non-finite samples, ToleranceError (with
/// best estimate attached) if the refinement budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec = {});

/// Nodes/weights of the m-point Gauss-Legendre rule on [-1, 1]; cached.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int points);

}  // namespace grunwald
