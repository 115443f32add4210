#include <cmath>
#include <vector>

#include "core/constants.hpp"
#include "core/errors.hpp"
#include "doctest.h"
#include "grunwald/grunwald.hpp"
#include "report/probe_functions.hpp"

using namespace grunwald;

TEST_SUITE_BEGIN("grunwald");

TEST_CASE("the mean reproduces constants exactly") {
  for (int n : {1, 7, 33}) {
    const ChebyshevGrid grid(n);
    for (double theta : {0.0, 0.5, 1.9, kPi}) {
      CHECK(std::abs(apply_interp_mean(grid, [](double) { return 4.25; },
                                       theta) -
                     4.25) < 1e-11);
    }
  }
}

TEST_CASE("the mean damps the cosine by exactly cos(pi/(2n))") {
  for (int n : {2, 5, 10, 50}) {
    const ChebyshevGrid grid(n);
    const double damping = std::cos(kPi / (2.0 * n));
    for (double theta : {0.15, 1.1, 2.7}) {
      const double value =
          apply_interp_mean(grid, [](double t) { return std::cos(t); }, theta);
      CHECK(std::abs(value - damping * std::cos(theta)) < 1e-11);
    }
  }
}

TEST_CASE("convergence report reflects the exact cosine identity") {
  const auto rows = convergence_report({2, 5, 10}, 1e-3 * kPi);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.err_one < 1e-12);
    CHECK(std::abs(row.err_cos - (1.0 - std::cos(kPi / (2.0 * row.n)))) <
          1e-8);
    CHECK(row.residual_identity < 1e-10);
    CHECK(row.err_cos_sq > 0.0);
  }
  // err_cos shrinks like n^{-2}.
  CHECK(rows[2].err_cos < rows[0].err_cos);
}

TEST_CASE("extended mean agrees on [0,pi] and is continuous at the seam") {
  const ChebyshevGrid grid(6);
  const auto f = [](double t) { return std::sin(t / 3.0) + 0.2 * t; };
  for (double theta : {0.3, 1.4, 3.0}) {
    CHECK(std::abs(apply_interp_mean_extended(grid, f, theta) -
                   apply_interp_mean(grid, f, theta)) < 1e-12);
  }
  // Each period cell [j pi, (j+1) pi] interpolates with nodes translated by
  // j pi, so values just past a seam come from the next cell's interpolant.
  const double eps = 1e-7;
  CHECK(std::abs(apply_interp_mean_extended(grid, f, kPi + eps) -
                 apply_interp_mean(
                     grid, [&](double t) { return f(t + kPi); }, eps)) <
        1e-12);
  CHECK(std::abs(apply_interp_mean_extended(grid, f, -eps) -
                 apply_interp_mean(
                     grid, [&](double t) { return f(t - kPi); },
                     kPi - eps)) < 1e-12);
  // One full period out, the node pattern repeats:
  // evaluating at theta + 2pi equals evaluating the translated function.
  CHECK(std::abs(apply_interp_mean_extended(grid, f, 0.9 + kTwoPi) -
                 apply_interp_mean_extended(
                     grid, [&](double t) { return f(t + kTwoPi); }, 0.9)) <
        1e-9);
}

TEST_CASE("lebesgue function bounds one and its sup is the operator norm") {
  const ChebyshevGrid grid(8);
  double max_pointwise = 0.0;
  for (double theta = 0.0; theta <= kPi; theta += 0.01) {
    const double lambda = lebesgue_function(grid, theta);
    CHECK(lambda >= 1.0 - 1e-10);
    max_pointwise = std::max(max_pointwise, lambda);
  }
  const SupResult norm = operator_norm(grid, 1e-3 * kPi);
  CHECK(norm.value >= max_pointwise - 1e-9);
  CHECK(norm.value < 4.0 / kPi + 0.01);
}

TEST_CASE("norm sweep records per-order norms and their running maximum") {
  const NormSweep sweep = norm_sweep({2, 4, 8}, 1e-3 * kPi);
  REQUIRE(sweep.norms.size() == 3);
  CHECK(sweep.c1 == doctest::Approx(sweep.norms.back()));
  CHECK(sweep.norms[0] < sweep.norms[1]);
  CHECK(sweep.c1 < 4.0 / kPi);
}

TEST_CASE("rate functionals are positive and decay with the order") {
  const ChebyshevGrid small(10), large(40);
  const double nu_small = nu_rate(small, 1e-3 * kPi);
  const double nu_large = nu_rate(large, 1e-3 * kPi);
  CHECK(nu_small > nu_large);
  CHECK(nu_large > 0.0);
  const double xi_small = xi_rate(small, 1e-3 * kPi);
  const double xi_large = xi_rate(large, 1e-3 * kPi);
  CHECK(xi_small > xi_large);
  // xi_n is an angle-metric sup; for n=10 it sits near 0.44 (about 10x the
  // n=100 value), far above nu_n for the same order.
  CHECK(xi_small > nu_small);
}

TEST_CASE("a nonnegative hat witnesses the loss of positivity for n >= 2") {
  for (int n : {3, 5}) {
    const ChebyshevGrid grid(n);
    const Witness w = nonpositivity_witness(grid, 1e-4);
    CHECK(w.value < 0.0);
    CHECK(w.theta >= 0.0);
    CHECK(w.theta <= kPi);
  }
  CHECK_THROWS_AS(nonpositivity_witness(ChebyshevGrid(1), 1e-4),
                  WitnessNotFoundError);
}

TEST_CASE("quantitative bounds hold with the measured norm constant") {
  const ChebyshevGrid grid(10);
  const double c1 = norm_sweep({10}, 1e-3 * kPi).c1;

  RealFunction tent = tent_example();
  const BoundReport cos_bound = quantitative_bound_report(
      grid, BoundFlavor::kCosComposed, tent, c1, 1e-3 * kPi);
  CHECK(cos_bound.holds);
  CHECK(cos_bound.lhs > 0.0);
  CHECK(cos_bound.delta == doctest::Approx(nu_rate(grid, 1e-3 * kPi)));

  RealFunction angle_probe;
  angle_probe.name = "angle_probe";
  angle_probe.domain = {0.0, kPi};
  angle_probe.eval = [](double t) { return std::abs(t - 1.0); };
  const BoundReport angle_bound = quantitative_bound_report(
      grid, BoundFlavor::kAngleDirect, angle_probe, c1, 1e-3 * kPi);
  CHECK(angle_bound.holds);
  CHECK(angle_bound.delta == doctest::Approx(xi_rate(grid, 1e-3 * kPi)));

  RealFunction smooth;
  smooth.name = "smooth";
  smooth.domain = {0.0, kPi};
  smooth.eval = [](double t) { return std::sin(t); };
  smooth.derivative = [](double t) { return std::cos(t); };
  const BoundReport deriv_bound = quantitative_bound_report(
      grid, BoundFlavor::kAngleDerivative, smooth, c1, 1e-3 * kPi);
  CHECK(deriv_bound.holds);
}

TEST_SUITE_END();
