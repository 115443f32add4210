#include "extended/closed_form.hpp"

#include <bit>
#include <cmath>

#include "core/constants.hpp"
#include "core/errors.hpp"

namespace grunwald {

namespace {

constexpr int kMaxExponent = 24;   // 2^r enumeration cap
constexpr int kMaxClosedOrder = 16;

// sin(a pi) / a with the removable singularity filled in.
double s_factor(double a) {
  if (std::fabs(a) < 1e-9) return kPi;
  return std::sin(a * kPi) / a;
}

// (1 - cos(a pi)) / a = 2 sin^2(a pi / 2) / a, with V(0) = 0.
double v_factor(double a) {
  if (std::fabs(a) < 1e-9) return 0.0;
  double s = std::sin(0.5 * a * kPi);
  return 2.0 * s * s / a;
}

}  // namespace

std::vector<double> elementary_coeffs(const ChebyshevGrid& grid, int k) {
  const int n = grid.order();
  if (k < 1 || k > n) {
    throw InvalidArgumentError("elementary_coeffs: node index out of range");
  }
  // Multiply out prod_{j != k} (x - c_j) keeping descending-power layout:
  // after each factor, a_r <- a_r - c_j a_{r-1}.
  std::vector<double> a(n, 0.0);
  a[0] = 1.0;
  int len = 1;
  for (int j = 1; j <= n; ++j) {
    if (j == k) continue;
    const double c = grid.cos_angle(j);
    for (int r = len; r >= 1; --r) a[r] -= c * a[r - 1];
    ++len;
  }
  return a;
}

std::complex<double> rr_term(const ChebyshevGrid& grid, int r, double p) {
  if (r < 0 || r > kMaxExponent) {
    throw InvalidArgumentError(
        "rr_term: exponent must be in [0, 24] (2^r enumeration)");
  }
  const double h = grid.shift();
  const std::uint32_t count = 1u << r;
  double re = 0.0, im = 0.0;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    // Sign pattern: bit set -> +1, clear -> -1; M = (#set) - (#clear).
    const int m = 2 * std::popcount(mask) - r;
    const double md = static_cast<double>(m);
    const double ec = 0.5 * (s_factor(md + p) + s_factor(md - p));
    const double es = 0.5 * (v_factor(p + md) + v_factor(p - md));
    const double ch = std::cos(md * h);
    re += ch * ec;
    im += ch * es;
  }
  const double scale = 2.0 / static_cast<double>(count);
  return {scale * re, scale * im};
}

std::complex<double> vk_closed_form(const ChebyshevGrid& grid, int k,
                                    double p) {
  const int n = grid.order();
  if (n > kMaxClosedOrder) {
    throw InvalidArgumentError(
        "vk_closed_form: order capped at 16 (exponential enumeration); use "
        "vk_quadrature");
  }
  if (k < 1 || k > n) {
    throw InvalidArgumentError("vk_closed_form: node index out of range");
  }
  const std::vector<double> a = elementary_coeffs(grid, k);
  std::complex<double> acc{0.0, 0.0};
  for (int r = 0; r < n; ++r) {
    if (a[r] == 0.0) continue;
    acc += a[r] * rr_term(grid, n - 1 - r, p);
  }
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  const double lead = std::ldexp(1.0, n - 1);  // 2^{n-1}
  return acc * (sign * lead * grid.sin_angle(k) / n);
}

std::complex<double> vk_quadrature(const ChebyshevGrid& grid, int k, double p,
                                   const QuadratureSpec& spec) {
  if (k < 1 || k > grid.order()) {
    throw InvalidArgumentError("vk_quadrature: node index out of range");
  }
  QuadratureSpec q = spec;
  q.rule = QuadRule::kGaussComposite;
  // The pair is a trig polynomial of degree n-1 in theta; the phase adds |p|.
  q.oscillation_freq =
      std::max(q.oscillation_freq, grid.order() - 1.0 + std::fabs(p));
  return integrate_complex(
      [&grid, k, p](double theta) {
        return shifted_pair(grid, k, theta) *
               std::complex<double>(std::cos(p * theta), std::sin(p * theta));
      },
      0.0, kPi, q);
}

}  // namespace grunwald
