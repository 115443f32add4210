#pragma once

#include <string>
#include <vector>

#include "report/run_config.hpp"
#include "report/table.hpp"

namespace grunwald {

/// Outcome of one golden comparison attached to a table.  `mode` selects how
/// the pass flag is derived:
///   "rel":   |value - reference| <= tolerance * |reference|
///   "abs":   |value - reference| <= tolerance
///   "bound": value <= reference + tolerance
///   "info":  recorded for the manifest but never failing
struct GoldenCheck {
  std::string label;
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  std::string mode = "abs";
  bool pass = true;
};

/// Builds a check with the pass flag filled in from the mode.
GoldenCheck make_check(std::string label, double value, double reference,
                       double tolerance, std::string mode);

/// A rendered table together with its golden verdicts and manifest record.
struct TableResult {
  ReportTable table;
  std::vector<GoldenCheck> goldens;
  double runtime_seconds = 0.0;
  /// Extra manifest fields as one JSON object string ("{}" when none).
  std::string extra_json = "{}";

  /// True when every non-"info" golden passed.
  bool all_pass() const;
  /// One-line JSON manifest record: table name, row count, runtime, verdicts,
  /// and the extra fields merged in.
  std::string manifest_json() const;
};

/// Which probe function drives the rate table.
enum class RateExample {
  kTent,
  kCubic,
};

/// Rate table for the interpolation means: columns n, nu_n, omega_f(nu_n),
/// omega_Ff(nu_n), where F is the forward transform of the probe sampled once
/// over the window [-5 pi, 5 pi].  Golden checks compare nu against the
/// published column (0.5% gate), the probe moduli against their published
/// columns, and two scale-free transform-modulus properties (ratio spread and
/// successive-row ratios); see README.md ("Reference deviations") for the
/// rows that are expected to miss the published figures.
TableResult rate_table(RateExample example, const std::vector<int>& orders,
                       const RunConfig& cfg);

/// Angle-metric rate table: columns n, xi_n.  Rows at the first five
/// published orders are gated at 2%; the remaining published rows are
/// recorded as informational.
TableResult xi_table(const std::vector<int>& orders, const RunConfig& cfg);

/// Windowed inverse-transform values of the Gaussian spectrum at the given
/// points, one row per (order, point) with the window half-range m bound to
/// the order unless cfg.l_trunc pins it.  Golden checks cover stabilization
/// between the two largest orders, realness at p = 1, and the re = im
/// symmetry at p = 1.5 in alternating mode; the scan over phase and scale
/// conventions reports the variant closest to the published p = 1 column in
/// the manifest.
TableResult kn_table(const std::vector<int>& orders,
                     const std::vector<double>& points, const RunConfig& cfg);

/// Property suite for the interpolation means and their windowed transforms:
/// partition of unity, node cardinality, reproduction of constants, the
/// cosine identity, negativity witnesses, the dyadic norm sweep (records the
/// empirical norm-constant estimate), closed-form node transforms against
/// quadrature, L^1 convergence of the windowed operator on a smooth bump
/// with the xi-ratio band, and the smoothed-variant identity and L^1 decay.
TableResult grunwald_suite(const RunConfig& cfg);

/// Property suite for the cell-averaging operators: moment closed forms,
/// alternating-family L^1 norm identity, negativity witnesses with their
/// closed forms, norm bounds over random probes, characteristic-function
/// sequences, and the mu rate (formula agreement, decay, bound inequality).
TableResult kantorovich_suite(const RunConfig& cfg);

/// Default row sets used by the CLI and the golden gates.
std::vector<int> default_rate_orders();
std::vector<int> default_xi_orders();
std::vector<int> default_kn_orders();
std::vector<double> default_kn_points();

}  // namespace grunwald
