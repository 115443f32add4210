#include "core/sup_search.hpp"

#include <cmath>
#include <cstdint>

#include "core/errors.hpp"

namespace grunwald {

namespace {

double checked(const std::function<double(double)>& f, double x) {
  double v = f(x);
  if (!std::isfinite(v)) {
    throw EvaluationError("sup_on_interval: non-finite value at x=" +
                          std::to_string(x));
  }
  return v;
}

// Golden-section maximization on [a, b]; returns the best interior sample.
SupResult golden_max(const std::function<double(double)>& f, double a,
                     double b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = checked(f, x1);
  double f2 = checked(f, x2);
  for (int iter = 0; iter < 80 && (b - a) > 1e-15 * (std::fabs(a) + 1.0);
       ++iter) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = checked(f, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = checked(f, x2);
    }
  }
  return f1 >= f2 ? SupResult{x1, f1} : SupResult{x2, f2};
}

}  // namespace

SupResult sup_on_interval(const std::function<double(double)>& f,
                          const Interval& I, double grid_step, bool polish) {
  I.require_nonempty("sup_on_interval");
  if (!(grid_step > 0.0)) {
    throw InvalidArgumentError("sup_on_interval: grid_step must be positive");
  }
  const double len = I.length();
  const std::int64_t n =
      std::max<std::int64_t>(2, static_cast<std::int64_t>(std::llround(
                                    std::ceil(len / grid_step))));
  SupResult best{I.lo, checked(f, I.lo)};
  std::int64_t best_i = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    double x = (i == n) ? I.hi : I.lo + len * (static_cast<double>(i) / n);
    double v = checked(f, x);
    if (v > best.value) {  // strict: keeps the left-most maximizer on ties
      best = {x, v};
      best_i = i;
    }
  }
  if (polish) {
    double lo = I.clamp(I.lo + len * (static_cast<double>(best_i - 1) / n));
    double hi = I.clamp(I.lo + len * (static_cast<double>(best_i + 1) / n));
    if (hi > lo) {
      SupResult refined = golden_max(f, lo, hi);
      if (refined.value > best.value) best = refined;
    }
  }
  return best;
}

}  // namespace grunwald
