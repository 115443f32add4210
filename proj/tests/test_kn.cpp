#include <cmath>
#include <complex>

#include "cheb/cheb.hpp"
#include "core/constants.hpp"
#include "doctest.h"
#include "extended/kn.hpp"
#include "fourier/fourier.hpp"
#include "report/probe_functions.hpp"

using namespace grunwald;

TEST_SUITE_BEGIN("kn");

TEST_CASE("window range is derived from the spectrum support when unset") {
  Spectrum s;
  s.name = "boxed";
  s.support = {-kTwoPi, kTwoPi};
  s.eval = [](double) { return std::complex<double>(1.0, 0.0); };
  const WindowedInverseOperator op(ChebyshevGrid(4), s, {});
  CHECK(op.l_min() == -2);
  CHECK(op.l_max() == 1);

  KnOptions pinned;
  pinned.l_min = -5;
  pinned.l_max = 5;
  const WindowedInverseOperator fixed(ChebyshevGrid(4), s, pinned);
  CHECK(fixed.l_min() == -5);
  CHECK(fixed.l_max() == 5);
}

TEST_CASE("alternating and exact phases coincide at odd integer arguments") {
  // The exact window phase is e^{i x l pi}, which reduces to the alternating
  // sign (-1)^l exactly when x is an odd integer.
  const ChebyshevGrid grid(8);
  const Spectrum s = gaussian_spectrum(1.0, 9.0 * kPi);
  KnOptions alt;
  alt.l_min = -8;
  alt.l_max = 8;
  alt.phase = PhaseMode::kAlternating;
  KnOptions exact = alt;
  exact.phase = PhaseMode::kExact;
  for (double x : {1.0, 3.0}) {
    const std::complex<double> a = apply_kn(grid, s, x, alt);
    const std::complex<double> b = apply_kn(grid, s, x, exact);
    CHECK(std::abs(a - b) < 1e-9);
  }
  // ... and differ elsewhere, including even integers (phase +1 vs (-1)^l).
  for (double x : {0.5, 2.0}) {
    const std::complex<double> a = apply_kn(grid, s, x, alt);
    const std::complex<double> b = apply_kn(grid, s, x, exact);
    CHECK(std::abs(a - b) > 1e-3);
  }
}

TEST_CASE("quadrature and closed-form node-transform paths agree") {
  const ChebyshevGrid grid(6);
  const Spectrum s = gaussian_spectrum(1.0, 7.0 * kPi);
  KnOptions quad_path;
  quad_path.l_min = -6;
  quad_path.l_max = 6;
  quad_path.path = KnPath::kQuadrature;
  KnOptions closed_path = quad_path;
  closed_path.path = KnPath::kClosedForm;
  for (double x : {1.0, 0.3}) {
    CHECK(std::abs(apply_kn(grid, s, x, quad_path) -
                   apply_kn(grid, s, x, closed_path)) < 1e-8);
  }
}

TEST_CASE("the Gaussian value at p=1 is real in alternating mode") {
  const ChebyshevGrid grid(12);
  const Spectrum s = gaussian_spectrum(1.0, 13.0 * kPi);
  KnOptions opts;
  opts.l_min = -12;
  opts.l_max = 12;
  const std::complex<double> value = apply_kn(grid, s, 1.0, opts);
  CHECK(std::abs(value.imag()) < 1e-12);
  CHECK(value.real() > 0.0);
}

TEST_CASE("smoothed operator equals the windowed operator on the damped "
          "spectrum") {
  const ChebyshevGrid grid(6);
  RealFunction tent = tent_example();
  const double delta = 0.5;
  KnOptions opts;
  opts.phase = PhaseMode::kExact;
  const WindowedInverseOperator smoothed = hn_operator(grid, tent, delta, opts);

  const ApproximateIdentity ai = fejer_identity(delta);
  Spectrum damped;
  damped.name = "damped";
  damped.support = ai.transform_support;
  damped.eval = [&](double t) {
    return fourier_transform(tent, t) * ai.transform(t);
  };
  KnOptions pinned = opts;
  pinned.l_min = smoothed.l_min();
  pinned.l_max = smoothed.l_max();
  const WindowedInverseOperator direct(grid, damped, pinned);
  for (double x : {0.4, 1.8}) {
    CHECK(std::abs(smoothed.apply(x) - direct.apply(x)) < 1e-8);
  }
}

TEST_CASE("L1 error against a target uses even composite panels") {
  const ChebyshevGrid grid(4);
  const Spectrum s = gaussian_spectrum(1.0, 5.0 * kPi);
  KnOptions opts;
  opts.l_min = -4;
  opts.l_max = 4;
  const WindowedInverseOperator op(grid, s, opts);
  const double err_zero =
      l1_error_on_interval(op, [](double) { return 0.0; }, {0.0, 1.0}, 17);
  const double norm = l1_error_on_interval(
      op, [&](double x) { return op.apply(x).real(); }, {0.0, 1.0}, 17);
  CHECK(err_zero > 0.0);
  CHECK(norm < 1e-12);  // distance of the operator to itself
}

TEST_CASE("rate rows pair the angle rate with the windowed L1 error") {
  RealFunction bump = smooth_bump();
  const Spectrum s = transform_spectrum(bump, 4.0 * kPi);
  KnOptions opts;
  opts.phase = PhaseMode::kExact;
  const auto rows =
      rate_report({4, 8}, s, bump.eval, {-1.0, 1.0}, opts, 1e-3 * kPi);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].xi > rows[1].xi);
  CHECK(rows[0].l1_err > 0.0);
  CHECK(rows[1].ratio == doctest::Approx(rows[1].l1_err / rows[1].xi));
}

TEST_SUITE_END();
