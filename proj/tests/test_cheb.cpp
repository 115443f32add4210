#include <cmath>
#include <random>
#include <vector>

#include "cheb/cheb.hpp"
#include "core/constants.hpp"
#include "core/errors.hpp"
#include "doctest.h"

using namespace grunwald;

TEST_SUITE_BEGIN("cheb");

TEST_CASE("grid angles are the first-kind Chebyshev root angles") {
  const ChebyshevGrid grid(5);
  CHECK(grid.order() == 5);
  CHECK(grid.shift() == doctest::Approx(kPi / 10.0));
  for (int k = 1; k <= 5; ++k) {
    CHECK(grid.angle(k) == doctest::Approx((2.0 * k - 1.0) * kPi / 10.0));
    CHECK(grid.cos_angle(k) == doctest::Approx(std::cos(grid.angle(k))));
  }
  CHECK_THROWS_AS(grid.angle(0), InvalidArgumentError);
  CHECK_THROWS_AS(grid.angle(6), InvalidArgumentError);
  CHECK_THROWS_AS(ChebyshevGrid(0), InvalidArgumentError);
}

TEST_CASE("fundamental polynomials satisfy the cardinality property") {
  for (int n : {1, 4, 11}) {
    const ChebyshevGrid grid(n);
    for (int k = 1; k <= n; ++k) {
      for (int j = 1; j <= n; ++j) {
        const double expected = k == j ? 1.0 : 0.0;
        CHECK(std::abs(fundamental_poly(grid, k, grid.angle(j)) - expected) <
              1e-12);
      }
    }
  }
}

TEST_CASE("rational-trig and product forms agree away from the nodes") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> pick(0.0, kPi);
  for (int n : {8, 64}) {
    const ChebyshevGrid grid(n);
    for (int trial = 0; trial < 50; ++trial) {
      const double theta = pick(rng);
      for (int k = 1; k <= n; k += 3) {
        const double a =
            fundamental_poly(grid, k, theta, PkEvalMode::kRationalTrig);
        const double b =
            fundamental_poly(grid, k, theta, PkEvalMode::kProductForm);
        CHECK(std::abs(a - b) < 1e-9);
      }
    }
  }
}

TEST_CASE("the guarded form stays accurate arbitrarily close to a node") {
  // The cardinal functions have nonzero slope at their own node, so values
  // at node + eps differ from 1 (resp. 0) at first order in eps.  The guard
  // is judged against the product form, which is stable near nodes.
  const ChebyshevGrid grid(32);
  const double node = grid.angle(7);
  for (double eps : {1e-4, 1e-7, 1e-10, 1e-13, 0.0}) {
    for (int k : {7, 8}) {
      const double guarded = fundamental_poly(grid, k, node + eps);
      const double stable =
          fundamental_poly(grid, k, node + eps, PkEvalMode::kProductForm);
      CHECK(std::abs(guarded - stable) < 1e-9);
    }
  }
  CHECK(fundamental_poly(grid, 7, node) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(fundamental_poly(grid, 8, node)) < 1e-12);
}

TEST_CASE("row evaluation matches per-node evaluation and sums to one") {
  for (int n : {3, 17, 40}) {
    const ChebyshevGrid grid(n);
    std::vector<double> row(static_cast<std::size_t>(n));
    for (double theta : {0.0, 0.39, 1.57, 2.8, kPi}) {
      fundamental_row(grid, theta, row.data());
      double sum = 0.0;
      for (int k = 1; k <= n; ++k) {
        CHECK(std::abs(row[static_cast<std::size_t>(k - 1)] -
                       fundamental_poly(grid, k, theta)) < 1e-11);
        sum += row[static_cast<std::size_t>(k - 1)];
      }
      CHECK(std::abs(sum - 1.0) < 1e-11);  // partition of unity
    }
  }
}

TEST_CASE("shifted pair rows combine the two half-node translates") {
  const ChebyshevGrid grid(9);
  std::vector<double> pair_row(9);
  for (double theta : {0.1, 1.0, 2.6}) {
    shifted_pair_row(grid, theta, pair_row.data());
    double sum = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const double direct =
          fundamental_poly(grid, k, theta - grid.shift()) +
          fundamental_poly(grid, k, theta + grid.shift());
      CHECK(std::abs(pair_row[static_cast<std::size_t>(k - 1)] - direct) <
            1e-10);
      CHECK(std::abs(shifted_pair(grid, k, theta) - direct) < 1e-10);
      sum += direct;
    }
    CHECK(std::abs(sum - 2.0) < 1e-10);  // both translates sum to one
  }
}

TEST_CASE("fundamental polynomials are even and 2pi-periodic in theta") {
  const ChebyshevGrid grid(6);
  for (double theta : {0.7, 2.2}) {
    for (int k = 1; k <= 6; ++k) {
      const double base = fundamental_poly(grid, k, theta);
      CHECK(std::abs(fundamental_poly(grid, k, -theta) - base) < 1e-12);
      CHECK(std::abs(fundamental_poly(grid, k, theta + kTwoPi) - base) <
            1e-10);
    }
  }
}

TEST_SUITE_END();
