#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "core/constants.hpp"
#include "core/interval.hpp"
#include "core/quadrature.hpp"
#include "core/real_function.hpp"

namespace grunwald {

/// Scale factors of the transform pair.  With the defaults,
///     forward:  F(f)(x)   = forward_scale * Int f(y) e^{-i x y} dy
///     inverse:  check(g)(x) = inverse_scale * Int g(t) e^{+i x t} dt
/// and forward_scale = 1, inverse_scale = 1/(2 pi) makes the pair
/// self-consistent (inverse o forward = identity on nice functions).
struct FourierConvention {
  double forward_scale = 1.0;
  double inverse_scale = 1.0 / kTwoPi;
};

/// A (possibly complex-valued) spectrum with compactly supported or
/// effectively truncated frequency content on `support`.
struct Spectrum {
  std::string name;
  std::function<std::complex<double>(double)> eval;
  Interval support{0.0, 1.0};

  std::complex<double> operator()(double t) const { return eval(t); }
};

/// Forward transform of f (restricted to f.domain) at frequency x.
/// Oscillation-aware: switches to composite Gauss panels when |x| is large.
std::complex<double> fourier_transform(const RealFunction& f, double x,
                                       const FourierConvention& conv = {},
                                       const QuadratureSpec& spec = {});

/// Spectrum wrapper around the forward transform of f.
Spectrum transform_spectrum(const RealFunction& f, double band_limit,
                            const FourierConvention& conv = {},
                            const QuadratureSpec& spec = {});

/// Inverse transform of a spectrum at point x (integral over its support).
std::complex<double> inverse_transform(const Spectrum& s, double x,
                                       const FourierConvention& conv = {},
                                       const QuadratureSpec& spec = {});

/// A positive approximate identity together with its transform.
struct ApproximateIdentity {
  double delta = 1.0;
  std::function<double(double)> kernel;      // phi_delta, integrates to 1
  std::function<double(double)> transform;   // hat(phi_delta)
  Interval transform_support{0.0, 1.0};      // where the transform lives
};

/// The Fejer-type identity: kernel (1/(2 pi delta)) (sin(x/(2 delta)) / (x/(2 delta)))^2,
/// whose transform is the triangle (1 - |delta t|)_+ supported on [-1/delta, 1/delta].
ApproximateIdentity fejer_identity(double delta);

/// (f * phi)(x) over f.domain.
double convolve(const RealFunction& f, const ApproximateIdentity& ai,
                double x, const QuadratureSpec& spec = {});

/// Window maxima  M_l = sup_{t in [l pi, (l+1) pi]} |s(t)|  for l in
/// [l_min, l_max], their sum, and a summability heuristic (true when the
/// maxima eventually vanish or decay geometrically).  The integrability class
/// behind the windowed operators requires sum_l M_l < infinity.
struct ClassUDiagnostic {
  std::vector<double> window_maxima;
  double sum = 0.0;
  bool summable = false;
};
ClassUDiagnostic class_u_diagnostic(const Spectrum& s, int l_min, int l_max,
                                    double grid_step = 1e-3);

}  // namespace grunwald
