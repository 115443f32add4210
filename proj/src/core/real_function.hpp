#pragma once

#include <functional>
#include <string>
#include <vector>
#include <utility>

#include "core/interval.hpp"

namespace grunwald {

/// Smoothness class a probe function advertises.  Consumers use it to pick
/// quadrature rules and to decide whether derivative-based bounds apply.
enum class Smoothness {
  kPiecewiseContinuous,  // may have jump discontinuities (indicators)
  kContinuous,           // continuous, possibly with kinks
  kC1,                   // continuously differentiable
  kC2,                   // twice continuously differentiable
};

/// A real-valued function on a closed interval, with optional extras:
///  - `derivative`  : exact first derivative (for derivative-based bounds);
///  - `cell_integral`: exact integral over a subinterval [a, b], used by
///    cell-averaging operators so that indicator probes are integrated
///    without quadrature error.
struct RealFunction {
  std::string name;
  std::function<double(double)> eval;
  Interval domain{0.0, 1.0};
  Smoothness smoothness = Smoothness::kContinuous;
  std::function<double(double)> derivative;                  // optional
  std::function<double(double, double)> cell_integral;       // optional
  /// Points where eval jumps or kinks; quadrature splits at these so each
  /// piece is smooth.
  std::vector<double> breakpoints;

  double operator()(double x) const { return eval(x); }
  bool has_derivative() const { return static_cast<bool>(derivative); }
  bool has_cell_integral() const { return static_cast<bool>(cell_integral); }
};

/// Monomial t^j on [0, 1] with exact cell integrals.
inline RealFunction monomial(int j) {
  if (j < 0) throw InvalidArgumentError("monomial: exponent must be >= 0");
  RealFunction f;
  f.name = "e" + std::to_string(j);
  f.eval = [j](double x) {
    double p = 1.0;
    for (int i = 0; i < j; ++i) p *= x;
    return p;
  };
  f.domain = {0.0, 1.0};
  f.smoothness = Smoothness::kC2;
  f.derivative = [j](double x) {
    if (j == 0) return 0.0;
    double p = static_cast<double>(j);
    for (int i = 0; i < j - 1; ++i) p *= x;
    return p;
  };
  f.cell_integral = [j](double a, double b) {
    auto pow_int = [](double x, int m) {
      double p = 1.0;
      for (int i = 0; i < m; ++i) p *= x;
      return p;
    };
    return (pow_int(b, j + 1) - pow_int(a, j + 1)) / (j + 1);
  };
  return f;
}

/// Indicator of [lo, hi] (as a function on `domain`), with exact cell
/// integrals given by overlap length.
inline RealFunction indicator(double lo, double hi, Interval domain) {
  if (!(lo < hi)) throw InvalidArgumentError("indicator: need lo < hi");
  RealFunction f;
  f.name = "indicator";
  f.eval = [lo, hi](double x) { return (x >= lo && x <= hi) ? 1.0 : 0.0; };
  f.domain = domain;
  f.smoothness = Smoothness::kPiecewiseContinuous;
  f.breakpoints = {lo, hi};
  f.cell_integral = [lo, hi](double a, double b) {
    double l = a > lo ? a : lo;
    double r = b < hi ? b : hi;
    return r > l ? r - l : 0.0;
  };
  return f;
}

}  // namespace grunwald
