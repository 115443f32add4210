#pragma once

#include <functional>

#include "core/interval.hpp"

namespace grunwald {

/// Result of a supremum search: the left-most maximizing argument found and
/// the value there.
struct SupResult {
  double arg = 0.0;
  double value = 0.0;
};

/// Approximate sup of f over I: dense grid scan with the given absolute step,
/// then (optionally) a golden-section polish of the bracket around the best
/// grid point.  Ties on the grid keep the left-most maximizer.  Throws
/// EvaluationError if f returns a non-finite value, InvalidArgumentError on a
/// degenerate interval or non-positive step.
SupResult sup_on_interval(const std::function<double(double)>& f,
                          const Interval& I, double grid_step,
                          bool polish = true);

}  // namespace grunwald
