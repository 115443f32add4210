#include "core/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>

#include "core/constants.hpp"
#include "core/errors.hpp"

namespace grunwald {

namespace {

// Max over all windows of `width + 1` consecutive samples of
// (window max - window min), via two monotone deques.
double sliding_oscillation(const std::vector<double>& v, std::size_t width) {
  if (v.size() < 2) return 0.0;
  if (width + 1 >= v.size()) {
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
  }
  std::deque<std::size_t> maxq, minq;
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    while (!maxq.empty() && v[maxq.back()] <= v[i]) maxq.pop_back();
    maxq.push_back(i);
    while (!minq.empty() && v[minq.back()] >= v[i]) minq.pop_back();
    minq.push_back(i);
    if (i >= width) {
      if (maxq.front() + width < i) maxq.pop_front();
      if (minq.front() + width < i) minq.pop_front();
      best = std::max(best, v[maxq.front()] - v[minq.front()]);
    }
  }
  // Windows narrower than `width+1` at the head were skipped above, but every
  // pair inside them reappears in the first full window, so nothing is lost.
  return best;
}

std::size_t window_width(double step, double delta) {
  // Number of grid steps that still satisfy |x - y| <= delta; a small slack
  // absorbs roundoff in delta / step.
  return static_cast<std::size_t>(std::floor(delta / step + 1e-9));
}

template <class T>
std::vector<T> sample(const std::function<T(double)>& f, const Interval& I,
                      double grid_step, double& step_out) {
  I.require_nonempty("modulus_of_continuity");
  if (!(grid_step > 0.0)) {
    throw InvalidArgumentError(
        "modulus_of_continuity: grid_step must be positive");
  }
  const double len = I.length();
  const std::int64_t n = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::llround(std::ceil(len / grid_step))));
  step_out = len / static_cast<double>(n);
  std::vector<T> vals(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    double x = (i == n) ? I.hi : I.lo + len * (static_cast<double>(i) / n);
    T v = f(x);
    if constexpr (std::is_same_v<T, double>) {
      if (!std::isfinite(v)) {
        throw EvaluationError("modulus_of_continuity: non-finite value");
      }
    } else {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw EvaluationError("modulus_of_continuity: non-finite value");
      }
    }
    vals[static_cast<std::size_t>(i)] = v;
  }
  return vals;
}

}  // namespace

double modulus_on_samples(const std::vector<double>& values, double step,
                          double delta) {
  if (!(step > 0.0)) {
    throw InvalidArgumentError("modulus_on_samples: step must be positive");
  }
  if (delta <= 0.0 || values.size() < 2) return 0.0;
  return sliding_oscillation(values, window_width(step, delta));
}

double modulus_of_continuity(const std::function<double(double)>& f,
                             const Interval& I, double delta,
                             double grid_step) {
  double step = 0.0;
  auto vals = sample<double>(f, I, grid_step, step);
  return modulus_on_samples(vals, step, delta);
}

double modulus_on_samples(const std::vector<std::complex<double>>& values,
                          double step, double delta, int directions) {
  if (!(step > 0.0)) {
    throw InvalidArgumentError("modulus_on_samples: step must be positive");
  }
  if (directions < 1) {
    throw InvalidArgumentError("modulus_on_samples: directions must be >= 1");
  }
  if (delta <= 0.0 || values.size() < 2) return 0.0;
  const std::size_t width = window_width(step, delta);
  std::vector<double> proj(values.size());
  double best = 0.0;
  for (int d = 0; d < directions; ++d) {
    const double phi = kPi * d / directions;
    const double c = std::cos(phi), s = std::sin(phi);
    for (std::size_t i = 0; i < values.size(); ++i) {
      proj[i] = c * values[i].real() + s * values[i].imag();
    }
    best = std::max(best, sliding_oscillation(proj, width));
  }
  return best;
}

double modulus_of_continuity(
    const std::function<std::complex<double>(double)>& f, const Interval& I,
    double delta, double grid_step, int directions) {
  double step = 0.0;
  auto vals = sample<std::complex<double>>(f, I, grid_step, step);
  return modulus_on_samples(vals, step, delta, directions);
}

}  // namespace grunwald
