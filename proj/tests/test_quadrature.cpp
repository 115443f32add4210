#include <cmath>
#include <complex>

#include "core/constants.hpp"
#include "core/errors.hpp"
#include "core/l1.hpp"
#include "core/quadrature.hpp"
#include "doctest.h"

using namespace grunwald;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("adaptive Simpson integrates smooth functions to tolerance") {
  const double value =
      integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(std::abs(value - (std::exp(1.0) - 1.0)) < 1e-12);
}

TEST_CASE("adaptive Simpson resolves an interior kink") {
  const double value =
      integrate([](double x) { return std::abs(x); }, -1.0, 1.0);
  CHECK(std::abs(value - 1.0) < 1e-10);
}

TEST_CASE("degenerate and reversed intervals are rejected") {
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0, {}),
                  InvalidArgumentError);
  QuadratureSpec bad;
  bad.abs_tol = -1.0;
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, bad),
                  InvalidArgumentError);
}

TEST_CASE("non-finite integrand values raise EvaluationError") {
  CHECK_THROWS_AS(
      integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, {}),
      EvaluationError);
}

TEST_CASE("an unresolvable jump exhausts refinement and reports its estimate") {
  // The jump keeps the local Simpson error from contracting; the routine must
  // give up loudly instead of returning a silently wrong value.
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.max_refinement = 8;
  try {
    integrate([](double x) { return x > 1.0 / 3.0 ? 1.0 : 0.0; }, 0.0, 1.0,
              spec);
    CHECK_MESSAGE(false, "expected ToleranceError");
  } catch (const ToleranceError& e) {
    CHECK(std::abs(e.best_re - 2.0 / 3.0) < 1e-2);
  }
}

TEST_CASE("oscillation-aware Gauss panels handle high frequencies") {
  QuadratureSpec spec;
  spec.rule = QuadRule::kGaussComposite;
  spec.oscillation_freq = 40.0;
  const double value =
      integrate([](double x) { return std::cos(40.0 * x); }, 0.0, kTwoPi, spec);
  CHECK(std::abs(value) < 1e-10);

  spec.oscillation_freq = 30.0;
  const std::complex<double> osc = integrate_complex(
      [](double t) { return std::exp(std::complex<double>(0.0, 30.0 * t)); },
      0.0, kPi, spec);
  const std::complex<double> exact =
      (std::exp(std::complex<double>(0.0, 30.0 * kPi)) - 1.0) /
      std::complex<double>(0.0, 30.0);
  CHECK(std::abs(osc - exact) < 1e-10);
}

TEST_CASE("fixed Gauss-Legendre nodes are exact on low-degree polynomials") {
  const auto rule = gauss_legendre(8);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = 0.5 + 0.5 * rule.nodes[i];  // map [-1,1] -> [0,1]
    sum += 0.5 * rule.weights[i] * x * x * x * x * x * x * x;
  }
  CHECK(std::abs(sum - 1.0 / 8.0) < 1e-14);
}

TEST_CASE("piecewise L1 norm splits at the listed breakpoints") {
  // |2x - 1| on [0,1]: integral 1/2, kink at 1/2.
  const double value = l1_norm_piecewise(
      [](double x) { return 2.0 * x - 1.0; }, {0.0, 1.0}, {0.5});
  CHECK(std::abs(value - 0.5) < 1e-12);
}

TEST_SUITE_END();
