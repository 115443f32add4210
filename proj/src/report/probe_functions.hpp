#pragma once

#include <cstdint>
#include <vector>

#include "core/real_function.hpp"
#include "fourier/fourier.hpp"

namespace grunwald {

/// The degree-one piecewise example on [-1, 1]:
///   -2x - 1 on [-1, -0.5],  2x + 1 on (-0.5, 0],  -2x + 1 on (0, 1].
/// Continuous, Lipschitz constant 2 (so its modulus is exactly 2*delta for
/// delta <= 1).  Evaluates to 0 outside [-1, 1].
RealFunction tent_example();

/// The cubic piecewise example on [-1, 1], kinked at the nodes:
///   0.5(x+1)^3 on [-1,-0.5], -0.5x^3 on (-0.5,0],
///   0.5x^3 on (0,0.5], 0.5(1-x)^3 on (0.5,1].
/// Two bumps of height 1/16 peaking at x = +-0.5.  0 outside [-1, 1].
RealFunction cubic_example();

/// The C^2 bump (1 - x^2)^3 on [-1, 1], 0 outside; first and second
/// derivatives vanish at the edges, so the extension by 0 is C^2 on R.
RealFunction smooth_bump();

/// The Gaussian spectrum  scale * sqrt(pi) * e^{-t^2/4}  (the transform of
/// e^{-x^2} under forward scale `scale`), with nominal support
/// [-half_support, half_support].
Spectrum gaussian_spectrum(double scale, double half_support);

/// Deterministic pseudo-random probe mix  c0 + c1 x + c2 x^2 + c3 sin(w x)
/// on [0, 1], for operator-norm sampling.
std::vector<RealFunction> random_probe_functions(int count,
                                                 std::uint32_t seed);

}  // namespace grunwald
