#include "cheb/cheb.hpp"

#include <cmath>

#include "core/constants.hpp"

namespace grunwald {

namespace {
// Below this distance in the cos variable the rational form loses too many
// digits to cancellation and the product form takes over.  The rational
// form's absolute error grows like eps/distance (the argument rounding of
// cos(n theta) divided by the near-zero denominator), so the guard has to sit
// around 1e-3 for the fundamental values to stay reliable to ~1e-12; the
// product form inside the guard is unconditionally stable at O(n) cost.
constexpr double kNearNodeGuard = 1e-3;
}  // namespace

ChebyshevGrid::ChebyshevGrid(int order) : n_(order) {
  if (order < 1 || order > kMaxOrder) {
    throw InvalidArgumentError("ChebyshevGrid: order must be in [1, 4096]");
  }
  shift_ = kPi / (2.0 * n_);
  theta_.resize(n_);
  cos_.resize(n_);
  sin_.resize(n_);
  for (int k = 1; k <= n_; ++k) {
    double t = (2.0 * k - 1.0) * kPi / (2.0 * n_);
    theta_[k - 1] = t;
    cos_[k - 1] = std::cos(t);
    sin_[k - 1] = std::sin(t);
  }
}

namespace {

double product_form(const ChebyshevGrid& grid, int k, double ct) {
  const auto& c = grid.cosines();
  const double ck = c[k - 1];
  double p = 1.0;
  for (int j = 0; j < grid.order(); ++j) {
    if (j == k - 1) continue;
    p *= (ct - c[j]) / (ck - c[j]);
  }
  return p;
}

inline double rational_form(const ChebyshevGrid& grid, int k, double ct,
                            double cnt) {
  const double d = ct - grid.cos_angle(k);
  if (std::fabs(d) < kNearNodeGuard) return product_form(grid, k, ct);
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  return sign * cnt * grid.sin_angle(k) / (grid.order() * d);
}

}  // namespace

double fundamental_poly(const ChebyshevGrid& grid, int k, double theta,
                        PkEvalMode mode) {
  if (k < 1 || k > grid.order()) {
    throw InvalidArgumentError("fundamental_poly: node index out of range");
  }
  const double ct = std::cos(theta);
  if (mode == PkEvalMode::kProductForm) return product_form(grid, k, ct);
  const double cnt = std::cos(grid.order() * theta);
  return rational_form(grid, k, ct, cnt);
}

double shifted_pair(const ChebyshevGrid& grid, int k, double theta) {
  const double h = grid.shift();
  return fundamental_poly(grid, k, theta - h) +
         fundamental_poly(grid, k, theta + h);
}

void fundamental_row(const ChebyshevGrid& grid, double theta, double* out) {
  const int n = grid.order();
  const double ct = std::cos(theta);
  const double cnt = std::cos(n * theta);
  const auto& c = grid.cosines();
  const auto& s = grid.sines();
  double sign = 1.0;
  for (int k = 1; k <= n; ++k, sign = -sign) {
    const double d = ct - c[k - 1];
    if (std::fabs(d) < kNearNodeGuard) {
      out[k - 1] = product_form(grid, k, ct);
    } else {
      out[k - 1] = sign * cnt * s[k - 1] / (n * d);
    }
  }
}

void shifted_pair_row(const ChebyshevGrid& grid, double theta, double* out) {
  const int n = grid.order();
  const double h = grid.shift();
  const double tm = theta - h;
  const double tp = theta + h;
  const double ctm = std::cos(tm);
  const double ctp = std::cos(tp);
  // cos(n (theta -+ h)) with n h = pi/2:  cos(n theta -+ pi/2) = +-sin(n theta).
  const double snt = std::sin(n * theta);
  const double cntm = snt;
  const double cntp = -snt;
  const auto& c = grid.cosines();
  const auto& s = grid.sines();
  double sign = 1.0;
  for (int k = 1; k <= n; ++k, sign = -sign) {
    const double dm = ctm - c[k - 1];
    const double dp = ctp - c[k - 1];
    double pm = (std::fabs(dm) < kNearNodeGuard)
                    ? product_form(grid, k, ctm)
                    : sign * cntm * s[k - 1] / (n * dm);
    double pp = (std::fabs(dp) < kNearNodeGuard)
                    ? product_form(grid, k, ctp)
                    : sign * cntp * s[k - 1] / (n * dp);
    out[k - 1] = pm + pp;
  }
}

}  // namespace grunwald
