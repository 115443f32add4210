#pragma once

#include <complex>
#include <vector>

#include "cheb/cheb.hpp"
#include "core/quadrature.hpp"
#include "core/real_function.hpp"
#include "fourier/fourier.hpp"

namespace grunwald {

/// How the per-window phase factor is applied when the windowed node sums are
/// recombined:
///  - kAlternating: (-1)^l per window (the printed recipe; exact at x = 1);
///  - kExact: e^{i x l pi} per window (the translation-faithful phase).
enum class PhaseMode {
  kAlternating,
  kExact,
};

/// Which evaluation path computes the node transforms V_k(x).
enum class KnPath {
  kQuadrature,  // oscillation-aware Gauss panels; production path
  kClosedForm,  // exact enumeration; order <= 16, used as cross-check oracle
};

struct KnOptions {
  /// Window range l in [l_min, l_max]; windows are [l pi, (l+1) pi].  When
  /// l_min > l_max the range is derived from the spectrum support as
  /// [floor(lo/pi), ceil(hi/pi) - 1].
  int l_min = 0;
  int l_max = -1;
  PhaseMode phase = PhaseMode::kAlternating;
  KnPath path = KnPath::kQuadrature;
  FourierConvention conv{};
  QuadratureSpec quad{};
};

/// The windowed inverse-transform mean: node samples of a spectrum are taken
/// window by window, folded with the phase factor, and recombined through the
/// interpolation-mean node transforms:
///     A(x) = inverse_scale * sum_l phase(l, x) * (1/2) sum_k s(theta_k + l pi) V_k(x),
///     V_k(x) = Int_0^pi [P_k(t - h) + P_k(t + h)] e^{i x t} dt.
/// Node samples are cached at construction; apply(x) costs one oscillatory
/// integral (quadrature path) or one closed-form enumeration per node.
class WindowedInverseOperator {
 public:
  WindowedInverseOperator(const ChebyshevGrid& grid, const Spectrum& s,
                          const KnOptions& opts = {});

  std::complex<double> apply(double x) const;

  int l_min() const { return l_min_; }
  int l_max() const { return l_max_; }
  const KnOptions& options() const { return opts_; }

 private:
  std::vector<std::complex<double>> combined_coeffs(double x) const;

  ChebyshevGrid grid_;
  KnOptions opts_;
  int l_min_ = 0, l_max_ = -1;
  // samples_[li][k-1] = s(theta_k + (l_min + li) pi)
  std::vector<std::vector<std::complex<double>>> samples_;
  // Pre-combined alternating-phase coefficients (phase independent of x).
  std::vector<std::complex<double>> alt_coeffs_;
};

/// One-shot evaluation (builds the operator, applies it at x).
std::complex<double> apply_kn(const ChebyshevGrid& grid, const Spectrum& s,
                              double x, const KnOptions& opts = {});

/// The smoothed variant: the spectrum is the transform of f multiplied by the
/// triangle transform of the Fejer-type identity with parameter delta; the
/// window range defaults to +-m with m = ceil(1 / (delta pi)).
WindowedInverseOperator hn_operator(const ChebyshevGrid& grid,
                                    const RealFunction& f, double delta,
                                    KnOptions opts = {});

std::complex<double> apply_hn_delta(const ChebyshevGrid& grid,
                                    const RealFunction& f, double delta,
                                    double x, const KnOptions& opts = {});

/// L^1 distance between x -> A(x) (real part) and a target on [I.lo, I.hi],
/// by composite Simpson with a node count tied to the operator order.
double l1_error_on_interval(const WindowedInverseOperator& op,
                            const std::function<double(double)>& target,
                            const Interval& I, int min_nodes = 257);

/// Convergence-rate rows: for each order, the angle-metric rate xi_n and the
/// L^1 error of the operator against f on `window`, plus their ratio.
struct RateRow {
  int n = 0;
  double xi = 0.0;
  double l1_err = 0.0;
  double ratio = 0.0;  // l1_err / xi
};
std::vector<RateRow> rate_report(const std::vector<int>& orders,
                                 const Spectrum& s,
                                 const std::function<double(double)>& f,
                                 const Interval& window, const KnOptions& opts,
                                 double xi_grid_step);

}  // namespace grunwald
