#include <cmath>
#include <functional>
#include <complex>
#include <vector>

#include "core/constants.hpp"
#include "core/errors.hpp"
#include "core/modulus.hpp"
#include "core/sup_search.hpp"
#include "doctest.h"

using namespace grunwald;

TEST_SUITE_BEGIN("sup_modulus");

TEST_CASE("grid scan plus golden polish locates an interior maximum") {
  const SupResult r =
      sup_on_interval([](double t) { return std::sin(t); }, {0.0, kPi}, 1e-3);
  CHECK(std::abs(r.value - 1.0) < 1e-10);
  CHECK(std::abs(r.arg - kPi / 2.0) < 1e-5);
}

TEST_CASE("ties keep the left-most maximizer and edges are included") {
  const SupResult flat =
      sup_on_interval([](double) { return 2.5; }, {0.0, 1.0}, 0.1, false);
  CHECK(flat.arg == doctest::Approx(0.0));
  const SupResult edge =
      sup_on_interval([](double t) { return t; }, {0.0, 1.0}, 0.3, false);
  CHECK(edge.value == doctest::Approx(1.0));
}

TEST_CASE("sup search rejects bad input and non-finite values") {
  CHECK_THROWS_AS(
      sup_on_interval([](double t) { return t; }, {1.0, 0.0}, 0.1),
      InvalidArgumentError);
  CHECK_THROWS_AS(sup_on_interval([](double t) { return std::log(t); },
                                  {-1.0, 1.0}, 0.25),
                  EvaluationError);
}

TEST_CASE("modulus of continuity of x^2 on [0,1] is 2d - d^2") {
  const double w = modulus_of_continuity(
      std::function<double(double)>([](double x) { return x * x; }), {0.0, 1.0}, 0.1, 1e-5);
  CHECK(std::abs(w - 0.19) < 1e-4);
}

TEST_CASE("modulus degenerate deltas: zero and whole-interval") {
  const std::function<double(double)> f = [](double x) { return std::cos(x); };
  CHECK(modulus_of_continuity(f, {0.0, kPi}, 0.0, 1e-4) == 0.0);
  // delta >= length: global oscillation max - min = 2.
  CHECK(std::abs(modulus_of_continuity(f, {0.0, kPi}, 10.0, 1e-4) - 2.0) <
        1e-8);
}

TEST_CASE("sampled and functional moduli agree on a shared grid") {
  const double step = 1e-4;
  std::vector<double> samples;
  for (double x = 0.0; x <= 1.0 + 1e-12; x += step) {
    samples.push_back(std::sin(3.0 * x));
  }
  const double from_samples = modulus_on_samples(samples, step, 0.2);
  const double from_function = modulus_of_continuity(
      std::function<double(double)>(
          [](double x) { return std::sin(3.0 * x); }), {0.0, 1.0},
      0.2, step);
  CHECK(std::abs(from_samples - from_function) < 1e-12);
}

TEST_CASE("complex modulus of e^{ix} matches 2 sin(delta/2)") {
  // |e^{ix} - e^{iy}| = 2 |sin((x-y)/2)|, increasing in |x-y| up to pi.
  const double delta = 0.3;
  const double w = modulus_of_continuity(
      [](double x) { return std::exp(std::complex<double>(0.0, x)); },
      {-kPi, kPi}, delta, 1e-4);
  const double exact = 2.0 * std::sin(delta / 2.0);
  // The direction sweep underestimates by at most cos(pi/128).
  CHECK(w <= exact + 1e-9);
  CHECK(w >= exact * std::cos(kPi / 128.0) - 1e-6);
}

TEST_SUITE_END();
