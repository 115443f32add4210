#pragma once

#include <string>

#include "extended/kn.hpp"
#include "fourier/fourier.hpp"

namespace grunwald {

/// Knobs shared by every table command.  Resolution order (lowest to highest
/// precedence): built-in defaults, config file, GRUNWALD_* environment
/// variables, command-line flags.  The file and environment layers live here;
/// the flag layer is applied by the CLI on top.
struct RunConfig {
  /// Grid step for the sup searches, relative to pi (the searches run over
  /// angle intervals of length pi).
  double grid_step = 1e-5;
  double quad_tol = 1e-10;
  /// Window half-range m (windows l in [-m, m]) for the inverse-transform
  /// tables; -1 derives the range from the spectrum support.
  int l_trunc = -1;
  PhaseMode phase_mode = PhaseMode::kAlternating;
  FourierConvention convention{};
  std::string out_dir = "out";
  bool emit_svg = false;
  /// Worker threads for row-parallel table computation; 0 = hardware count.
  int threads = 0;

  /// Throws InvalidArgumentError when a value is out of range.
  void validate() const;
};

/// Keys understood by the config file and (uppercased, prefixed with
/// GRUNWALD_) by the environment:
///   grid_step, quad_tol, l_trunc, phase_mode (alternating|exact),
///   forward_scale, inverse_scale, out_dir, svg (0|1), threads.
/// The file format is one key=value per line; '#' starts a comment.
void apply_config_file(RunConfig* cfg, const std::string& path);

/// Applies GRUNWALD_GRID_STEP, GRUNWALD_QUAD_TOL, ... when set.
void apply_environment(RunConfig* cfg);

/// Sets one key (the config-file spelling) from a string value; shared by the
/// file parser, the environment layer, and the C API.
void apply_config_entry(RunConfig* cfg, const std::string& key,
                        const std::string& value);

std::string phase_mode_name(PhaseMode mode);
PhaseMode parse_phase_mode(const std::string& name);

}  // namespace grunwald
