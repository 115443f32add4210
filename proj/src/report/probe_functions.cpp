#include "report/probe_functions.hpp"

#include <cmath>
#include <random>
#include <string>

#include "core/constants.hpp"

namespace grunwald {

RealFunction tent_example() {
  RealFunction f;
  f.name = "tent";
  f.eval = [](double x) {
    if (x < -1.0 || x > 1.0) return 0.0;
    if (x <= -0.5) return -2.0 * x - 1.0;
    if (x <= 0.0) return 2.0 * x + 1.0;
    return -2.0 * x + 1.0;
  };
  f.domain = {-1.0, 1.0};
  f.smoothness = Smoothness::kContinuous;
  f.breakpoints = {-0.5, 0.0};
  return f;
}

RealFunction cubic_example() {
  RealFunction f;
  f.name = "cubic";
  f.eval = [](double x) {
    if (x < -1.0 || x > 1.0) return 0.0;
    if (x <= -0.5) {
      const double t = x + 1.0;
      return 0.5 * t * t * t;
    }
    if (x <= 0.0) return -0.5 * x * x * x;
    if (x <= 0.5) return 0.5 * x * x * x;
    const double t = 1.0 - x;
    return 0.5 * t * t * t;
  };
  f.domain = {-1.0, 1.0};
  f.smoothness = Smoothness::kContinuous;
  f.breakpoints = {-0.5, 0.0, 0.5};
  return f;
}

RealFunction smooth_bump() {
  RealFunction f;
  f.name = "smooth_bump";
  f.eval = [](double x) {
    if (x < -1.0 || x > 1.0) return 0.0;
    const double t = 1.0 - x * x;
    return t * t * t;
  };
  f.domain = {-1.0, 1.0};
  f.smoothness = Smoothness::kC2;
  f.derivative = [](double x) {
    if (x < -1.0 || x > 1.0) return 0.0;
    const double t = 1.0 - x * x;
    return -6.0 * x * t * t;
  };
  return f;
}

Spectrum gaussian_spectrum(double scale, double half_support) {
  Spectrum s;
  s.name = "gaussian";
  const double amp = scale * std::sqrt(kPi);
  s.eval = [amp](double t) {
    return std::complex<double>(amp * std::exp(-0.25 * t * t), 0.0);
  };
  s.support = {-half_support, half_support};
  return s;
}

std::vector<RealFunction> random_probe_functions(int count,
                                                 std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> freq(1.0, 7.0);
  std::vector<RealFunction> probes;
  probes.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng),
                 c3 = coef(rng);
    const double w = freq(rng);
    RealFunction f;
    f.name = "probe_" + std::to_string(i);
    f.eval = [c0, c1, c2, c3, w](double x) {
      return c0 + c1 * x + c2 * x * x + c3 * std::sin(w * x);
    };
    f.domain = {0.0, 1.0};
    f.smoothness = Smoothness::kC2;
    f.derivative = [c1, c2, c3, w](double x) {
      return c1 + 2.0 * c2 * x + c3 * w * std::cos(w * x);
    };
    probes.push_back(std::move(f));
  }
  return probes;
}

}  // namespace grunwald
