#include <cmath>
#include <complex>
#include <vector>

#include "cheb/cheb.hpp"
#include "core/constants.hpp"
#include "core/errors.hpp"
#include "doctest.h"
#include "extended/closed_form.hpp"

using namespace grunwald;

TEST_SUITE_BEGIN("closed_form");

TEST_CASE("elementary coefficients expand the deflated node polynomial") {
  const ChebyshevGrid grid(4);
  for (int k = 1; k <= 4; ++k) {
    const std::vector<double> coeffs = elementary_coeffs(grid, k);
    REQUIRE(coeffs.size() == 4);  // degree n-1 polynomial, n coefficients
    CHECK(coeffs[0] == doctest::Approx(1.0));  // monic
    // q_k(c_j) = 0 for j != k, q_k(c_k) != 0.
    for (int j = 1; j <= 4; ++j) {
      double value = 0.0;
      for (double a : coeffs) value = value * grid.cos_angle(j) + a;
      if (j == k) {
        CHECK(std::abs(value) > 1e-3);
      } else {
        CHECK(std::abs(value) < 1e-12);
      }
    }
  }
}

TEST_CASE("power-term transform matches its direct oscillatory integral") {
  const ChebyshevGrid grid(6);
  const double h = grid.shift();
  QuadratureSpec spec;
  spec.rule = QuadRule::kGaussComposite;
  spec.abs_tol = 1e-12;
  for (int r : {0, 1, 3, 5}) {
    for (double p : {0.0, 0.7, -2.3}) {
      spec.oscillation_freq = r + std::abs(p) + 1.0;
      const std::complex<double> direct = integrate_complex(
          [&](double t) {
            const double powers = std::pow(std::cos(t - h), r) +
                                  std::pow(std::cos(t + h), r);
            return powers * std::exp(std::complex<double>(0.0, p * t));
          },
          0.0, kPi, spec);
      CHECK(std::abs(rr_term(grid, r, p) - direct) < 1e-9);
    }
  }
}

TEST_CASE("power-term transform at r=0 has the elementary closed value") {
  const ChebyshevGrid grid(3);
  const double p = 1.3;
  const std::complex<double> expected =
      2.0 * (std::exp(std::complex<double>(0.0, p * kPi)) - 1.0) /
      std::complex<double>(0.0, p);
  CHECK(std::abs(rr_term(grid, 0, p) - expected) < 1e-12);
}

TEST_CASE("node transforms: closed form equals quadrature") {
  for (int n : {2, 5, 9}) {
    const ChebyshevGrid grid(n);
    for (int k = 1; k <= n; k += 2) {
      for (double p : {0.4, -1.9}) {
        const std::complex<double> closed = vk_closed_form(grid, k, p);
        const std::complex<double> quad = vk_quadrature(grid, k, p);
        CHECK(std::abs(closed - quad) < 1e-8);
      }
    }
  }
}

TEST_CASE("node transforms at p=0 integrate the pair partition to 2 pi") {
  // (1/2) sum_k pair_k(t) = 1 on [0, pi], so sum_k V_k(0) = 2 pi.
  const ChebyshevGrid grid(7);
  std::complex<double> sum = 0.0;
  for (int k = 1; k <= 7; ++k) sum += vk_closed_form(grid, k, 0.0);
  CHECK(std::abs(sum.real() - kTwoPi) < 1e-10);
  CHECK(std::abs(sum.imag()) < 1e-10);
}

TEST_CASE("exponential-cost paths enforce their caps") {
  CHECK_THROWS_AS(vk_closed_form(ChebyshevGrid(17), 1, 1.0),
                  InvalidArgumentError);
  CHECK_THROWS_AS(rr_term(ChebyshevGrid(4), 25, 1.0), InvalidArgumentError);
  CHECK_THROWS_AS(rr_term(ChebyshevGrid(4), -1, 1.0), InvalidArgumentError);
}

TEST_SUITE_END();
