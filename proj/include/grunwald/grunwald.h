/* C interface to the approximation-operator library: trigonometric
 * interpolation means on Chebyshev angles, their rate functionals and
 * windowed inverse-transform extensions, cell-averaging operators on [0, 1],
 * and the table-reproduction commands.
 *
 * Conventions:
 *  - Every fallible call returns gw_status; GW_OK is 0.  On failure,
 *    gw_last_error_message() returns a thread-local description valid until
 *    the next failing call on the same thread.
 *  - Objects are created through *_create factories and released with the
 *    matching *_free; free functions accept NULL.
 *  - Strings returned by accessors are owned by the queried handle and stay
 *    valid until the handle is freed (or, for gw_table_svg, until the next
 *    gw_table_svg call on the same handle).
 */
#ifndef GRUNWALD_GRUNWALD_H_
#define GRUNWALD_GRUNWALD_H_

#if defined(_WIN32)
#define GW_API __declspec(dllexport)
#else
#define GW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gw_status {
  GW_OK = 0,
  GW_INVALID_ARGUMENT = 1,  /* bad parameter, malformed config, range error */
  GW_EVALUATION_ERROR = 2,  /* non-finite values or inconsistent state */
  GW_TOLERANCE_ERROR = 3,   /* quadrature / search budget exhausted */
  GW_WITNESS_NOT_FOUND = 4, /* negativity scan found no witness */
  GW_UNKNOWN_ERROR = 5
} gw_status;

/* Weight families of the cell-averaging operators on [0, 1]. */
typedef enum gw_family {
  GW_FAMILY_CLASSICAL = 0,   /* positive; converges to the identity */
  GW_FAMILY_HALF_DYADIC = 1, /* sign-indefinite; converges to f(x/2) */
  GW_FAMILY_ALTERNATING = 2  /* sign-alternating; converges to 0 */
} gw_family;

/* Phase recombination of the windowed inverse-transform operator. */
typedef enum gw_phase_mode {
  GW_PHASE_ALTERNATING = 0, /* (-1)^l per window; published-table recipe */
  GW_PHASE_EXACT = 1        /* e^{i x l pi} per window; translation-faithful */
} gw_phase_mode;

/* Real-valued callback: f(x) with a caller-supplied context pointer. */
typedef double (*gw_real_fn)(double x, void *ctx);
/* Complex-valued spectrum callback: writes s(t) into *re, *im. */
typedef void (*gw_complex_fn)(double t, void *ctx, double *re, double *im);

typedef struct gw_grid gw_grid;
typedef struct gw_cell_operator gw_cell_operator;
typedef struct gw_run_config gw_run_config;
typedef struct gw_table_result gw_table_result;

/* Library version ("major.minor.patch"). */
GW_API const char *gw_version(void);

/* Thread-local message for the most recent failure on this thread. */
GW_API const char *gw_last_error_message(void);

/* ---- Chebyshev-angle grids and the interpolation mean ------------------ */

/* Grid of the n angles (2k-1)pi/(2n), k = 1..n; order in [1, 4096]. */
GW_API gw_status gw_grid_create(int order, gw_grid **out);
GW_API void gw_grid_free(gw_grid *grid);
GW_API int gw_grid_order(const gw_grid *grid);
/* k in [1, order]. */
GW_API gw_status gw_grid_angle(const gw_grid *grid, int k, double *out);

/* The shifted interpolation mean applied to samples of f, at theta in
 * [0, pi]. */
GW_API gw_status gw_interp_mean_apply(const gw_grid *grid, gw_real_fn f,
                                      void *ctx, double theta, double *out);
/* Extension to all of R by translating the node pattern. */
GW_API gw_status gw_interp_mean_apply_extended(const gw_grid *grid,
                                               gw_real_fn f, void *ctx,
                                               double theta, double *out);
/* Pointwise absolute row sum (its sup over [0, pi] is the operator norm). */
GW_API gw_status gw_lebesgue_function(const gw_grid *grid, double theta,
                                      double *out);
/* Sup of the absolute row sum over [0, pi], grid scan at `grid_step` plus
 * local polish. */
GW_API gw_status gw_operator_norm(const gw_grid *grid, double grid_step,
                                  double *out);
/* Rate functional in the cosine metric. */
GW_API gw_status gw_nu_rate(const gw_grid *grid, double grid_step,
                            double *out);
/* Rate functional in the angle metric. */
GW_API gw_status gw_xi_rate(const gw_grid *grid, double grid_step,
                            double *out);
/* A point where the mean of a nonnegative hat probe goes negative; fails
 * with GW_WITNESS_NOT_FOUND when the scan finds none (e.g. order 1). */
GW_API gw_status gw_nonpositivity_witness(const gw_grid *grid,
                                          double grid_step, double *theta_out,
                                          double *value_out);

/* ---- Windowed inverse-transform operator ------------------------------- */

/* Evaluate the order-n windowed inverse transform of a spectrum at x.
 * Windows l in [l_min, l_max] (each [l pi, (l+1) pi]); the spectrum callback
 * is sampled at the translated node angles.  forward_scale multiplies
 * nothing here (the callback is taken as-is); inverse_scale multiplies the
 * recombined integral.  quad_tol > 0 sets the oscillatory quadrature
 * tolerance. */
GW_API gw_status gw_windowed_inverse_eval(const gw_grid *grid,
                                          gw_complex_fn spectrum, void *ctx,
                                          int l_min, int l_max,
                                          gw_phase_mode phase,
                                          double inverse_scale,
                                          double quad_tol, double x,
                                          double *re_out, double *im_out);

/* The published-table special case: Gaussian spectrum
 * forward_scale * sqrt(pi) * e^{-t^2/4} on windows l in [-m, m]. */
GW_API gw_status gw_kn_gaussian_eval(int order, int m, gw_phase_mode phase,
                                     double forward_scale,
                                     double inverse_scale, double quad_tol,
                                     double p, double *re_out,
                                     double *im_out);

/* ---- Cell-averaging operators on [0, 1] -------------------------------- */

/* Direct application at x (cell averages integrated per call). */
GW_API gw_status gw_cell_apply(gw_family family, int order, gw_real_fn f,
                               void *ctx, double x, double *out);
/* Closed-form moment: the operator applied to t^j (j in [0, 2]) at x. */
GW_API gw_status gw_cell_moment(gw_family family, int order, int j, double x,
                                double *out);
/* Reusable operator: the n+1 cell averages of f are integrated once. */
GW_API gw_status gw_cell_operator_create(gw_family family, int order,
                                         gw_real_fn f, void *ctx,
                                         gw_cell_operator **out);
GW_API void gw_cell_operator_free(gw_cell_operator *op);
GW_API gw_status gw_cell_operator_apply(const gw_cell_operator *op, double x,
                                        double *out);
/* The quantitative rate of the family at this order (root of the averaged
 * second-moment defect against the family's limit operator). */
GW_API gw_status gw_cell_mu_rate(gw_family family, int order, double *out);

/* ---- Run configuration -------------------------------------------------- */

/* Fresh configuration with built-in defaults. */
GW_API gw_status gw_run_config_create(gw_run_config **out);
GW_API void gw_run_config_free(gw_run_config *cfg);
/* Set one key from its string value.  Keys: grid_step, quad_tol, l_trunc,
 * phase_mode (alternating|exact), forward_scale, inverse_scale, out_dir,
 * svg (0|1), threads. */
GW_API gw_status gw_run_config_set(gw_run_config *cfg, const char *key,
                                   const char *value);
/* Apply a key=value config file ('#' comments). */
GW_API gw_status gw_run_config_load_file(gw_run_config *cfg,
                                         const char *path);
/* Apply GRUNWALD_<KEY> environment overrides. */
GW_API gw_status gw_run_config_apply_env(gw_run_config *cfg);
/* Read scalar knobs back (NULL out-pointers are skipped). */
GW_API gw_status gw_run_config_get(const gw_run_config *cfg,
                                   double *grid_step, double *quad_tol,
                                   int *l_trunc, int *phase_mode,
                                   double *forward_scale,
                                   double *inverse_scale, int *emit_svg,
                                   int *threads);
/* The configured output directory. */
GW_API const char *gw_run_config_out_dir(const gw_run_config *cfg);

/* ---- Table commands ------------------------------------------------------
 * Each builder computes one report table plus its golden verdicts.  Golden
 * failures do NOT fail the call; they are recorded in the result (the caller
 * decides the exit status).                                                */

/* Cosine-metric rate table for a probe (0 = tent, 1 = cubic): columns
 * n, nu_n, omega_f, omega_Ff. */
GW_API gw_status gw_rate_table(int example, const int *orders, int count,
                               const gw_run_config *cfg,
                               gw_table_result **out);
/* Angle-metric rate table: columns n, xi_n. */
GW_API gw_status gw_xi_table(const int *orders, int count,
                             const gw_run_config *cfg, gw_table_result **out);
/* Windowed inverse-transform values of the Gaussian spectrum: one row per
 * (order, point). */
GW_API gw_status gw_kn_table(const int *orders, int order_count,
                             const double *points, int point_count,
                             const gw_run_config *cfg, gw_table_result **out);
/* Property suites (rows are labeled checks). */
GW_API gw_status gw_grunwald_suite(const gw_run_config *cfg,
                                   gw_table_result **out);
GW_API gw_status gw_kantorovich_suite(const gw_run_config *cfg,
                                      gw_table_result **out);

/* Default row sets.  Writes up to `cap` entries into `buf` (when non-NULL)
 * and stores the full count in *count.  `which` is one of "rate", "xi",
 * "kn"; "kn_points" fills doubles through gw_default_points. */
GW_API gw_status gw_default_orders(const char *which, int *buf, int cap,
                                   int *count);
GW_API gw_status gw_default_points(const char *which, double *buf, int cap,
                                   int *count);

/* ---- Table result accessors --------------------------------------------- */

GW_API void gw_table_result_free(gw_table_result *table);
GW_API const char *gw_table_name(const gw_table_result *table);
GW_API int gw_table_rows(const gw_table_result *table);
GW_API int gw_table_cols(const gw_table_result *table);
GW_API gw_status gw_table_cell(const gw_table_result *table, int row, int col,
                               double *out);
/* Row label ("" for unlabeled tables). */
GW_API const char *gw_table_row_label(const gw_table_result *table, int row);
/* Deterministic CSV rendering (12 significant digits, '\n' endings). */
GW_API const char *gw_table_csv(const gw_table_result *table);
/* Self-contained SVG line chart; log_y != 0 uses a log10 y axis. */
GW_API const char *gw_table_svg(gw_table_result *table, int log_y);
/* One-line JSON manifest record (verdicts, runtime, extras). */
GW_API const char *gw_table_manifest_json(const gw_table_result *table);
GW_API double gw_table_runtime_seconds(const gw_table_result *table);
/* 1 when every gated golden check passed. */
GW_API int gw_table_all_pass(const gw_table_result *table);
GW_API int gw_table_golden_count(const gw_table_result *table);
GW_API const char *gw_table_golden_label(const gw_table_result *table, int i);
/* "rel", "abs", "bound", or "info". */
GW_API const char *gw_table_golden_mode(const gw_table_result *table, int i);
GW_API gw_status gw_table_golden_numbers(const gw_table_result *table, int i,
                                         double *value, double *reference,
                                         double *tolerance);
GW_API int gw_table_golden_pass(const gw_table_result *table, int i);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRUNWALD_GRUNWALD_H_ */
