#include "fourier/fourier.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/sup_search.hpp"

namespace grunwald {

namespace {

// Switch to frequency-sized Gauss panels once the phase winds more than a few
// turns across the window; adaptive Simpson handles the gentle cases.
QuadratureSpec oscillatory_spec(const QuadratureSpec& base, double freq,
                                double width) {
  QuadratureSpec spec = base;
  if (freq * width > 4.0 * kTwoPi) {
    spec.rule = QuadRule::kGaussComposite;
    spec.oscillation_freq = std::max(spec.oscillation_freq, freq);
  }
  return spec;
}

}  // namespace

std::complex<double> fourier_transform(const RealFunction& f, double x,
                                       const FourierConvention& conv,
                                       const QuadratureSpec& spec) {
  f.domain.require_nonempty("fourier_transform");
  QuadratureSpec q = oscillatory_spec(spec, std::fabs(x), f.domain.length());
  std::complex<double> val = integrate_complex(
      [&f, x](double y) {
        return f.eval(y) *
               std::complex<double>(std::cos(x * y), -std::sin(x * y));
      },
      f.domain.lo, f.domain.hi, q);
  return conv.forward_scale * val;
}

Spectrum transform_spectrum(const RealFunction& f, double band_limit,
                            const FourierConvention& conv,
                            const QuadratureSpec& spec) {
  if (!(band_limit > 0.0)) {
    throw InvalidArgumentError("transform_spectrum: band_limit must be > 0");
  }
  Spectrum s;
  s.name = "transform(" + f.name + ")";
  s.support = {-band_limit, band_limit};
  s.eval = [f, conv, spec](double t) {
    return fourier_transform(f, t, conv, spec);
  };
  return s;
}

std::complex<double> inverse_transform(const Spectrum& s, double x,
                                       const FourierConvention& conv,
                                       const QuadratureSpec& spec) {
  s.support.require_nonempty("inverse_transform");
  QuadratureSpec q = oscillatory_spec(spec, std::fabs(x), s.support.length());
  std::complex<double> val = integrate_complex(
      [&s, x](double t) {
        return s.eval(t) *
               std::complex<double>(std::cos(x * t), std::sin(x * t));
      },
      s.support.lo, s.support.hi, q);
  return conv.inverse_scale * val;
}

ApproximateIdentity fejer_identity(double delta) {
  if (!(delta > 0.0)) {
    throw InvalidArgumentError("fejer_identity: delta must be positive");
  }
  ApproximateIdentity ai;
  ai.delta = delta;
  ai.kernel = [delta](double x) {
    double t = x / (2.0 * delta);
    double sinc;
    if (std::fabs(t) < 1e-8) {
      sinc = 1.0 - t * t / 3.0;  // series of (sin t / t)^2 near 0
    } else {
      double r = std::sin(t) / t;
      sinc = r * r;
    }
    return sinc / (kTwoPi * delta);
  };
  ai.transform = [delta](double t) {
    double v = 1.0 - std::fabs(delta * t);
    return v > 0.0 ? v : 0.0;
  };
  ai.transform_support = {-1.0 / delta, 1.0 / delta};
  return ai;
}

double convolve(const RealFunction& f, const ApproximateIdentity& ai,
                double x, const QuadratureSpec& spec) {
  f.domain.require_nonempty("convolve");
  return integrate(
      [&f, &ai, x](double y) { return f.eval(y) * ai.kernel(x - y); },
      f.domain.lo, f.domain.hi, spec);
}

ClassUDiagnostic class_u_diagnostic(const Spectrum& s, int l_min, int l_max,
                                    double grid_step) {
  if (l_min > l_max) {
    throw InvalidArgumentError("class_u_diagnostic: need l_min <= l_max");
  }
  ClassUDiagnostic diag;
  diag.window_maxima.reserve(l_max - l_min + 1);
  for (int l = l_min; l <= l_max; ++l) {
    Interval win{l * kPi, (l + 1) * kPi};
    // Outside the declared support the spectrum is identically zero.
    double lo = std::max(win.lo, s.support.lo);
    double hi = std::min(win.hi, s.support.hi);
    double m = 0.0;
    if (lo < hi) {
      m = sup_on_interval([&s](double t) { return std::abs(s.eval(t)); },
                          Interval{lo, hi}, grid_step)
              .value;
    }
    diag.window_maxima.push_back(m);
    diag.sum += m;
  }
  // Summable if the trailing windows vanish (compact support) or the last
  // decades of maxima decay geometrically.
  const auto& m = diag.window_maxima;
  if (!m.empty()) {
    double tail = m.back();
    if (tail == 0.0) {
      diag.summable = true;
    } else if (m.size() >= 4) {
      bool decaying = true;
      for (size_t i = m.size() - 3; i < m.size(); ++i) {
        if (!(m[i] < 0.9 * m[i - 1] || m[i] == 0.0)) decaying = false;
      }
      diag.summable = decaying;
    }
  }
  return diag;
}

}  // namespace grunwald
