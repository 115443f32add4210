#pragma once

#include <functional>

#include "core/interval.hpp"
#include "core/quadrature.hpp"

namespace grunwald {

/// Integral of |f| over I.
double l1_norm(const std::function<double(double)>& f, const Interval& I,
               const QuadratureSpec& spec = {});

/// Integral of |f - g| over I.
double l1_distance(const std::function<double(double)>& f,
                   const std::function<double(double)>& g, const Interval& I,
                   const QuadratureSpec& spec = {});

/// Integral of |f| over I, split at the given breakpoints so each piece is
/// smooth (adaptive rules stall on interior jumps).  Breakpoints outside I
/// are ignored; order does not matter.
double l1_norm_piecewise(const std::function<double(double)>& f,
                         const Interval& I,
                         const std::vector<double>& breakpoints,
                         const QuadratureSpec& spec = {});

}  // namespace grunwald
