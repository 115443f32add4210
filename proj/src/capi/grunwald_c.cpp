#include "grunwald/grunwald.h"

#include <complex>
#include <cstring>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "cheb/cheb.hpp"
#include "core/errors.hpp"
#include "core/interval.hpp"
#include "core/real_function.hpp"
#include "extended/kn.hpp"
#include "fourier/fourier.hpp"
#include "grunwald/grunwald.hpp"
#include "kantorovich/kantorovich.hpp"
#include "report/probe_functions.hpp"
#include "report/run_config.hpp"
#include "report/table.hpp"
#include "report/tables.hpp"

namespace {

thread_local std::string g_last_error;

gw_status fail(gw_status status, const char* message) {
  g_last_error = message;
  return status;
}

/// Runs fn inside a catch-all boundary: C callers never see a C++ exception.
template <class Fn>
gw_status guarded(Fn&& fn) {
  try {
    fn();
    return GW_OK;
  } catch (const grunwald::InvalidArgumentError& e) {
    return fail(GW_INVALID_ARGUMENT, e.what());
  } catch (const grunwald::ToleranceError& e) {
    return fail(GW_TOLERANCE_ERROR, e.what());
  } catch (const grunwald::WitnessNotFoundError& e) {
    return fail(GW_WITNESS_NOT_FOUND, e.what());
  } catch (const grunwald::EvaluationError& e) {
    return fail(GW_EVALUATION_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(GW_UNKNOWN_ERROR, e.what());
  } catch (...) {
    return fail(GW_UNKNOWN_ERROR, "unknown non-standard exception");
  }
}

grunwald::RealFunction wrap_callback(gw_real_fn f, void* ctx,
                                     grunwald::Interval domain) {
  if (!f) {
    throw grunwald::InvalidArgumentError("callback must not be NULL");
  }
  grunwald::RealFunction rf;
  rf.name = "callback";
  rf.domain = domain;
  rf.eval = [f, ctx](double x) { return f(x, ctx); };
  return rf;
}

grunwald::WeightFamily to_family(gw_family family) {
  switch (family) {
    case GW_FAMILY_CLASSICAL:
      return grunwald::WeightFamily::kClassical;
    case GW_FAMILY_HALF_DYADIC:
      return grunwald::WeightFamily::kHalfDyadic;
    case GW_FAMILY_ALTERNATING:
      return grunwald::WeightFamily::kAlternatingSign;
  }
  throw grunwald::InvalidArgumentError("unknown weight family");
}

grunwald::PhaseMode to_phase(gw_phase_mode phase) {
  switch (phase) {
    case GW_PHASE_ALTERNATING:
      return grunwald::PhaseMode::kAlternating;
    case GW_PHASE_EXACT:
      return grunwald::PhaseMode::kExact;
  }
  throw grunwald::InvalidArgumentError("unknown phase mode");
}

std::vector<int> to_vector(const int* data, int count, const char* who) {
  if (count <= 0 || !data) {
    throw grunwald::InvalidArgumentError(std::string(who) +
                                         ": need a non-empty array");
  }
  return std::vector<int>(data, data + count);
}

}  // namespace

struct gw_grid {
  grunwald::ChebyshevGrid impl;
};

struct gw_cell_operator {
  grunwald::CellAveragedOperator impl;
};

struct gw_run_config {
  grunwald::RunConfig impl;
};

struct gw_table_result {
  grunwald::TableResult impl;
  std::string csv;
  std::string manifest;
  std::string svg;
};

namespace {

gw_table_result* make_result(grunwald::TableResult result) {
  auto* handle = new gw_table_result{std::move(result), {}, {}, {}};
  handle->csv = grunwald::csv_string(handle->impl.table);
  handle->manifest = handle->impl.manifest_json();
  return handle;
}

const grunwald::GoldenCheck* golden_at(const gw_table_result* table, int i) {
  if (!table || i < 0 ||
      i >= static_cast<int>(table->impl.goldens.size())) {
    return nullptr;
  }
  return &table->impl.goldens[static_cast<std::size_t>(i)];
}

}  // namespace

const char* gw_version(void) { return "1.0.0"; }

const char* gw_last_error_message(void) { return g_last_error.c_str(); }

/* ---- grids and the interpolation mean ---------------------------------- */

gw_status gw_grid_create(int order, gw_grid** out) {
  if (!out) return fail(GW_INVALID_ARGUMENT, "gw_grid_create: out is NULL");
  *out = nullptr;
  return guarded([&] { *out = new gw_grid{grunwald::ChebyshevGrid(order)}; });
}

void gw_grid_free(gw_grid* grid) { delete grid; }

int gw_grid_order(const gw_grid* grid) {
  return grid ? grid->impl.order() : 0;
}

gw_status gw_grid_angle(const gw_grid* grid, int k, double* out) {
  if (!grid || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_grid_angle: NULL argument");
  }
  return guarded([&] { *out = grid->impl.angle(k); });
}

gw_status gw_interp_mean_apply(const gw_grid* grid, gw_real_fn f, void* ctx,
                               double theta, double* out) {
  if (!grid || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_interp_mean_apply: NULL argument");
  }
  return guarded([&] {
    const grunwald::RealFunction rf =
        wrap_callback(f, ctx, {0.0, grunwald::kPi});
    *out = grunwald::apply_interp_mean(grid->impl, rf.eval, theta);
  });
}

gw_status gw_interp_mean_apply_extended(const gw_grid* grid, gw_real_fn f,
                                        void* ctx, double theta, double* out) {
  if (!grid || !out) {
    return fail(GW_INVALID_ARGUMENT,
                "gw_interp_mean_apply_extended: NULL argument");
  }
  return guarded([&] {
    const grunwald::RealFunction rf =
        wrap_callback(f, ctx, {0.0, grunwald::kPi});
    *out = grunwald::apply_interp_mean_extended(grid->impl, rf.eval, theta);
  });
}

gw_status gw_lebesgue_function(const gw_grid* grid, double theta,
                               double* out) {
  if (!grid || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_lebesgue_function: NULL argument");
  }
  return guarded([&] { *out = grunwald::lebesgue_function(grid->impl, theta); });
}

gw_status gw_operator_norm(const gw_grid* grid, double grid_step,
                           double* out) {
  if (!grid || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_operator_norm: NULL argument");
  }
  return guarded(
      [&] { *out = grunwald::operator_norm(grid->impl, grid_step).value; });
}

gw_status gw_nu_rate(const gw_grid* grid, double grid_step, double* out) {
  if (!grid || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_nu_rate: NULL argument");
  }
  return guarded([&] { *out = grunwald::nu_rate(grid->impl, grid_step); });
}

gw_status gw_xi_rate(const gw_grid* grid, double grid_step, double* out) {
  if (!grid || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_xi_rate: NULL argument");
  }
  return guarded([&] { *out = grunwald::xi_rate(grid->impl, grid_step); });
}

gw_status gw_nonpositivity_witness(const gw_grid* grid, double grid_step,
                                   double* theta_out, double* value_out) {
  if (!grid || !theta_out || !value_out) {
    return fail(GW_INVALID_ARGUMENT,
                "gw_nonpositivity_witness: NULL argument");
  }
  return guarded([&] {
    const grunwald::Witness w =
        grunwald::nonpositivity_witness(grid->impl, grid_step);
    *theta_out = w.theta;
    *value_out = w.value;
  });
}

/* ---- windowed inverse-transform operator ------------------------------- */

gw_status gw_windowed_inverse_eval(const gw_grid* grid, gw_complex_fn spectrum,
                                   void* ctx, int l_min, int l_max,
                                   gw_phase_mode phase, double inverse_scale,
                                   double quad_tol, double x, double* re_out,
                                   double* im_out) {
  if (!grid || !spectrum || !re_out || !im_out) {
    return fail(GW_INVALID_ARGUMENT,
                "gw_windowed_inverse_eval: NULL argument");
  }
  return guarded([&] {
    grunwald::Spectrum s;
    s.name = "callback";
    s.support = {l_min * grunwald::kPi, (l_max + 1) * grunwald::kPi};
    s.eval = [spectrum, ctx](double t) {
      double re = 0.0, im = 0.0;
      spectrum(t, ctx, &re, &im);
      return std::complex<double>(re, im);
    };
    grunwald::KnOptions opts;
    opts.l_min = l_min;
    opts.l_max = l_max;
    opts.phase = to_phase(phase);
    opts.conv.inverse_scale = inverse_scale;
    opts.quad.abs_tol = quad_tol;
    const std::complex<double> value =
        grunwald::apply_kn(grid->impl, s, x, opts);
    *re_out = value.real();
    *im_out = value.imag();
  });
}

gw_status gw_kn_gaussian_eval(int order, int m, gw_phase_mode phase,
                              double forward_scale, double inverse_scale,
                              double quad_tol, double p, double* re_out,
                              double* im_out) {
  if (!re_out || !im_out) {
    return fail(GW_INVALID_ARGUMENT, "gw_kn_gaussian_eval: NULL argument");
  }
  return guarded([&] {
    if (m < 0) {
      throw grunwald::InvalidArgumentError(
          "gw_kn_gaussian_eval: window half-range must be >= 0");
    }
    const grunwald::ChebyshevGrid grid(order);
    const grunwald::Spectrum s =
        grunwald::gaussian_spectrum(forward_scale, (m + 1) * grunwald::kPi);
    grunwald::KnOptions opts;
    opts.l_min = -m;
    opts.l_max = m;
    opts.phase = to_phase(phase);
    opts.conv.forward_scale = forward_scale;
    opts.conv.inverse_scale = inverse_scale;
    opts.quad.abs_tol = quad_tol;
    const std::complex<double> value = grunwald::apply_kn(grid, s, p, opts);
    *re_out = value.real();
    *im_out = value.imag();
  });
}

/* ---- cell-averaging operators ------------------------------------------ */

gw_status gw_cell_apply(gw_family family, int order, gw_real_fn f, void* ctx,
                        double x, double* out) {
  if (!out) return fail(GW_INVALID_ARGUMENT, "gw_cell_apply: out is NULL");
  return guarded([&] {
    const grunwald::RealFunction rf = wrap_callback(f, ctx, {0.0, 1.0});
    const grunwald::CellAveragedOperator op(to_family(family), order, rf);
    *out = op.apply(x);
  });
}

gw_status gw_cell_moment(gw_family family, int order, int j, double x,
                         double* out) {
  if (!out) return fail(GW_INVALID_ARGUMENT, "gw_cell_moment: out is NULL");
  return guarded([&] {
    switch (to_family(family)) {
      case grunwald::WeightFamily::kClassical:
        *out = grunwald::kantorovich_moment(order, j, x);
        break;
      case grunwald::WeightFamily::kHalfDyadic:
        *out = grunwald::an_moment(order, j, x);
        break;
      case grunwald::WeightFamily::kAlternatingSign:
        *out = grunwald::bn_moment(order, j, x);
        break;
    }
  });
}

gw_status gw_cell_operator_create(gw_family family, int order, gw_real_fn f,
                                  void* ctx, gw_cell_operator** out) {
  if (!out) {
    return fail(GW_INVALID_ARGUMENT, "gw_cell_operator_create: out is NULL");
  }
  *out = nullptr;
  return guarded([&] {
    const grunwald::RealFunction rf = wrap_callback(f, ctx, {0.0, 1.0});
    *out = new gw_cell_operator{
        grunwald::CellAveragedOperator(to_family(family), order, rf)};
  });
}

void gw_cell_operator_free(gw_cell_operator* op) { delete op; }

gw_status gw_cell_operator_apply(const gw_cell_operator* op, double x,
                                 double* out) {
  if (!op || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_cell_operator_apply: NULL argument");
  }
  return guarded([&] { *out = op->impl.apply(x); });
}

gw_status gw_cell_mu_rate(gw_family family, int order, double* out) {
  if (!out) return fail(GW_INVALID_ARGUMENT, "gw_cell_mu_rate: out is NULL");
  return guarded([&] {
    *out = grunwald::mu_rate(
        grunwald::make_cell_operator(to_family(family), order));
  });
}

/* ---- run configuration -------------------------------------------------- */

gw_status gw_run_config_create(gw_run_config** out) {
  if (!out) {
    return fail(GW_INVALID_ARGUMENT, "gw_run_config_create: out is NULL");
  }
  *out = nullptr;
  return guarded([&] { *out = new gw_run_config{}; });
}

void gw_run_config_free(gw_run_config* cfg) { delete cfg; }

gw_status gw_run_config_set(gw_run_config* cfg, const char* key,
                            const char* value) {
  if (!cfg || !key || !value) {
    return fail(GW_INVALID_ARGUMENT, "gw_run_config_set: NULL argument");
  }
  return guarded([&] { grunwald::apply_config_entry(&cfg->impl, key, value); });
}

gw_status gw_run_config_load_file(gw_run_config* cfg, const char* path) {
  if (!cfg || !path) {
    return fail(GW_INVALID_ARGUMENT, "gw_run_config_load_file: NULL argument");
  }
  return guarded([&] { grunwald::apply_config_file(&cfg->impl, path); });
}

gw_status gw_run_config_apply_env(gw_run_config* cfg) {
  if (!cfg) {
    return fail(GW_INVALID_ARGUMENT, "gw_run_config_apply_env: cfg is NULL");
  }
  return guarded([&] { grunwald::apply_environment(&cfg->impl); });
}

gw_status gw_run_config_get(const gw_run_config* cfg, double* grid_step,
                            double* quad_tol, int* l_trunc, int* phase_mode,
                            double* forward_scale, double* inverse_scale,
                            int* emit_svg, int* threads) {
  if (!cfg) {
    return fail(GW_INVALID_ARGUMENT, "gw_run_config_get: cfg is NULL");
  }
  const grunwald::RunConfig& impl = cfg->impl;
  if (grid_step) *grid_step = impl.grid_step;
  if (quad_tol) *quad_tol = impl.quad_tol;
  if (l_trunc) *l_trunc = impl.l_trunc;
  if (phase_mode) {
    *phase_mode = impl.phase_mode == grunwald::PhaseMode::kAlternating
                      ? GW_PHASE_ALTERNATING
                      : GW_PHASE_EXACT;
  }
  if (forward_scale) *forward_scale = impl.convention.forward_scale;
  if (inverse_scale) *inverse_scale = impl.convention.inverse_scale;
  if (emit_svg) *emit_svg = impl.emit_svg ? 1 : 0;
  if (threads) *threads = impl.threads;
  return GW_OK;
}

const char* gw_run_config_out_dir(const gw_run_config* cfg) {
  return cfg ? cfg->impl.out_dir.c_str() : "";
}

/* ---- table commands ------------------------------------------------------ */

gw_status gw_rate_table(int example, const int* orders, int count,
                        const gw_run_config* cfg, gw_table_result** out) {
  if (!cfg || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_rate_table: NULL argument");
  }
  *out = nullptr;
  return guarded([&] {
    if (example != 0 && example != 1) {
      throw grunwald::InvalidArgumentError(
          "gw_rate_table: example must be 0 (tent) or 1 (cubic)");
    }
    *out = make_result(grunwald::rate_table(
        example == 0 ? grunwald::RateExample::kTent
                     : grunwald::RateExample::kCubic,
        to_vector(orders, count, "gw_rate_table"), cfg->impl));
  });
}

gw_status gw_xi_table(const int* orders, int count, const gw_run_config* cfg,
                      gw_table_result** out) {
  if (!cfg || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_xi_table: NULL argument");
  }
  *out = nullptr;
  return guarded([&] {
    *out = make_result(grunwald::xi_table(
        to_vector(orders, count, "gw_xi_table"), cfg->impl));
  });
}

gw_status gw_kn_table(const int* orders, int order_count, const double* points,
                      int point_count, const gw_run_config* cfg,
                      gw_table_result** out) {
  if (!cfg || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_kn_table: NULL argument");
  }
  *out = nullptr;
  return guarded([&] {
    if (point_count <= 0 || !points) {
      throw grunwald::InvalidArgumentError(
          "gw_kn_table: need a non-empty point array");
    }
    *out = make_result(grunwald::kn_table(
        to_vector(orders, order_count, "gw_kn_table"),
        std::vector<double>(points, points + point_count), cfg->impl));
  });
}

gw_status gw_grunwald_suite(const gw_run_config* cfg, gw_table_result** out) {
  if (!cfg || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_grunwald_suite: NULL argument");
  }
  *out = nullptr;
  return guarded([&] { *out = make_result(grunwald::grunwald_suite(cfg->impl)); });
}

gw_status gw_kantorovich_suite(const gw_run_config* cfg,
                               gw_table_result** out) {
  if (!cfg || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_kantorovich_suite: NULL argument");
  }
  *out = nullptr;
  return guarded(
      [&] { *out = make_result(grunwald::kantorovich_suite(cfg->impl)); });
}

gw_status gw_default_orders(const char* which, int* buf, int cap,
                            int* count) {
  if (!which || !count) {
    return fail(GW_INVALID_ARGUMENT, "gw_default_orders: NULL argument");
  }
  return guarded([&] {
    std::vector<int> orders;
    if (std::strcmp(which, "rate") == 0) {
      orders = grunwald::default_rate_orders();
    } else if (std::strcmp(which, "xi") == 0) {
      orders = grunwald::default_xi_orders();
    } else if (std::strcmp(which, "kn") == 0) {
      orders = grunwald::default_kn_orders();
    } else {
      throw grunwald::InvalidArgumentError(
          "gw_default_orders: which must be rate, xi, or kn");
    }
    *count = static_cast<int>(orders.size());
    if (buf) {
      for (int i = 0; i < cap && i < *count; ++i) buf[i] = orders[i];
    }
  });
}

gw_status gw_default_points(const char* which, double* buf, int cap,
                            int* count) {
  if (!which || !count) {
    return fail(GW_INVALID_ARGUMENT, "gw_default_points: NULL argument");
  }
  return guarded([&] {
    if (std::strcmp(which, "kn") != 0) {
      throw grunwald::InvalidArgumentError(
          "gw_default_points: which must be kn");
    }
    const std::vector<double> points = grunwald::default_kn_points();
    *count = static_cast<int>(points.size());
    if (buf) {
      for (int i = 0; i < cap && i < *count; ++i) buf[i] = points[i];
    }
  });
}

/* ---- table result accessors --------------------------------------------- */

void gw_table_result_free(gw_table_result* table) { delete table; }

const char* gw_table_name(const gw_table_result* table) {
  return table ? table->impl.table.name.c_str() : "";
}

int gw_table_rows(const gw_table_result* table) {
  return table ? static_cast<int>(table->impl.table.rows.size()) : 0;
}

int gw_table_cols(const gw_table_result* table) {
  return table ? static_cast<int>(table->impl.table.columns.size()) : 0;
}

gw_status gw_table_cell(const gw_table_result* table, int row, int col,
                        double* out) {
  if (!table || !out) {
    return fail(GW_INVALID_ARGUMENT, "gw_table_cell: NULL argument");
  }
  if (row < 0 || row >= gw_table_rows(table) || col < 0 ||
      col >= gw_table_cols(table)) {
    return fail(GW_INVALID_ARGUMENT, "gw_table_cell: index out of range");
  }
  *out = table->impl.table.rows[static_cast<std::size_t>(row)]
                              [static_cast<std::size_t>(col)];
  return GW_OK;
}

const char* gw_table_row_label(const gw_table_result* table, int row) {
  if (!table || row < 0 ||
      row >= static_cast<int>(table->impl.table.row_labels.size())) {
    return "";
  }
  return table->impl.table.row_labels[static_cast<std::size_t>(row)].c_str();
}

const char* gw_table_csv(const gw_table_result* table) {
  return table ? table->csv.c_str() : "";
}

const char* gw_table_svg(gw_table_result* table, int log_y) {
  if (!table) return "";
  grunwald::SvgOptions options;
  options.log_y = log_y != 0;
  try {
    table->svg = grunwald::svg_string(table->impl.table, options);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return "";
  }
  return table->svg.c_str();
}

const char* gw_table_manifest_json(const gw_table_result* table) {
  return table ? table->manifest.c_str() : "";
}

double gw_table_runtime_seconds(const gw_table_result* table) {
  return table ? table->impl.runtime_seconds : 0.0;
}

int gw_table_all_pass(const gw_table_result* table) {
  return table && table->impl.all_pass() ? 1 : 0;
}

int gw_table_golden_count(const gw_table_result* table) {
  return table ? static_cast<int>(table->impl.goldens.size()) : 0;
}

const char* gw_table_golden_label(const gw_table_result* table, int i) {
  const grunwald::GoldenCheck* check = golden_at(table, i);
  return check ? check->label.c_str() : "";
}

const char* gw_table_golden_mode(const gw_table_result* table, int i) {
  const grunwald::GoldenCheck* check = golden_at(table, i);
  return check ? check->mode.c_str() : "";
}

gw_status gw_table_golden_numbers(const gw_table_result* table, int i,
                                  double* value, double* reference,
                                  double* tolerance) {
  const grunwald::GoldenCheck* check = golden_at(table, i);
  if (!check) {
    return fail(GW_INVALID_ARGUMENT,
                "gw_table_golden_numbers: index out of range");
  }
  if (value) *value = check->value;
  if (reference) *reference = check->reference;
  if (tolerance) *tolerance = check->tolerance;
  return GW_OK;
}

int gw_table_golden_pass(const gw_table_result* table, int i) {
  const grunwald::GoldenCheck* check = golden_at(table, i);
  return check && check->pass ? 1 : 0;
}
