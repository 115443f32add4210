#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "core/interval.hpp"

namespace grunwald {

/// Modulus of continuity  w(f, delta) = sup { |f(x) - f(y)| : |x - y| <= delta }
/// over the interval, estimated on a uniform grid with the given step.
/// Runs in O(N) via monotone-deque sliding-window extrema.  delta <= 0 gives 0;
/// delta >= interval length gives the global oscillation max f - min f.
double modulus_of_continuity(const std::function<double(double)>& f,
                             const Interval& I, double delta,
                             double grid_step);

/// Same, for pre-sampled values on a uniform grid with spacing `step`.
double modulus_on_samples(const std::vector<double>& values, double step,
                          double delta);

/// Complex-valued variant: |z - w| is recovered as the maximum over
/// `directions` projection angles in [0, pi) of the projected oscillation;
/// with 64 directions the underestimate is below 0.031% (factor cos(pi/128)).
double modulus_of_continuity(
    const std::function<std::complex<double>(double)>& f, const Interval& I,
    double delta, double grid_step, int directions = 64);

double modulus_on_samples(const std::vector<std::complex<double>>& values,
                          double step, double delta, int directions = 64);

}  // namespace grunwald
