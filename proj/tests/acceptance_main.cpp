// Acceptance runner: evaluates the eleven shipping criteria at production
// settings and prints one PASS/FAIL line per criterion.  Exit status is the
// number of failed criteria.
//
// Known expected failures at the default settings are the reference-table
// rows discussed in README.md ("Reference deviations"): the published rate
// figures for several orders differ from freshly computed values by more than
// the stated tolerances, and those rows are reported honestly rather than
// loosened.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cheb/cheb.hpp"
#include "core/constants.hpp"
#include "core/quadrature.hpp"
#include "extended/closed_form.hpp"
#include "grunwald/grunwald.hpp"
#include "report/run_config.hpp"
#include "report/tables.hpp"

using namespace grunwald;

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int g_failures = 0;

void report(int id, bool pass, const std::string& name,
            const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("criterion %02d: %s  %s (%s)\n", id, pass ? "PASS" : "FAIL",
              name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

const GoldenCheck* find_check(const TableResult& result,
                              const std::string& label) {
  for (const auto& check : result.goldens) {
    if (check.label == label) return &check;
  }
  return nullptr;
}

/// All gated (non-informational) checks whose label starts with `prefix`;
/// pass iff every one passes (a missing prefix counts as failure so a renamed
/// label cannot silently un-gate a criterion).  Failing labels are appended
/// to `failed` when provided.
bool prefix_pass(const TableResult& result, const std::string& prefix,
                 int* count = nullptr, std::string* failed = nullptr) {
  int matched = 0;
  bool pass = true;
  for (const auto& check : result.goldens) {
    if (check.mode == "info") continue;
    if (check.label.rfind(prefix, 0) == 0) {
      ++matched;
      if (!check.pass) {
        pass = false;
        if (failed) *failed += check.label + " ";
      }
    }
  }
  if (count) *count = matched;
  return pass && matched > 0;
}

bool label_pass(const TableResult& result, const std::string& label,
                std::string* missing) {
  const GoldenCheck* check = find_check(result, label);
  if (!check) {
    *missing += label + "? ";
    return false;
  }
  return check->pass;
}

}  // namespace

int main() {
  RunConfig cfg;  // production defaults: grid_step 1e-5, quad_tol 1e-10
  std::printf("acceptance run: grid_step=%g quad_tol=%g phase=%s\n",
              cfg.grid_step, cfg.quad_tol,
              phase_mode_name(cfg.phase_mode).c_str());

  // ---- criterion 1: exact identities of the interpolation mean ----------
  {
    Stopwatch watch;
    double partition = 0.0, cardinality = 0.0, constant = 0.0;
    for (int n = 1; n <= 64; ++n) {
      const ChebyshevGrid grid(n);
      std::vector<double> row(static_cast<std::size_t>(n));
      std::vector<double> pair(static_cast<std::size_t>(n));
      for (int i = 0; i < 1000; ++i) {
        const double theta = kPi * i / 999.0;
        fundamental_row(grid, theta, row.data());
        shifted_pair_row(grid, theta, pair.data());
        double sum = 0.0, pair_sum = 0.0;
        for (int k = 0; k < n; ++k) {
          sum += row[static_cast<std::size_t>(k)];
          pair_sum += pair[static_cast<std::size_t>(k)];
        }
        partition = std::max(partition, std::fabs(sum - 1.0));
        constant = std::max(constant, std::fabs(0.5 * pair_sum - 1.0));
      }
      for (int j = 1; j <= n; ++j) {
        fundamental_row(grid, grid.angle(j), row.data());
        for (int k = 1; k <= n; ++k) {
          const double expected = k == j ? 1.0 : 0.0;
          cardinality = std::max(
              cardinality,
              std::fabs(row[static_cast<std::size_t>(k - 1)] - expected));
        }
      }
    }
    double cosine = 0.0;
    for (const auto& row : convergence_report({2, 5, 10, 50}, 1e-4 * kPi)) {
      cosine = std::max(cosine, row.residual_identity);
    }
    const bool pass = partition <= 1e-10 && cardinality <= 1e-10 &&
                      constant <= 1e-11 && cosine <= 1e-9;
    report(1, pass, "exact identities of the mean",
           fmt("partition=%.3g cardinality=%.3g constant=%.3g cosine=%.3g "
               "runtime=%.1fs",
               partition, cardinality, constant, cosine, watch.seconds()));
  }

  // ---- tables used by criteria 2, 3, 4, 6 --------------------------------
  const TableResult tent = rate_table(RateExample::kTent,
                                      default_rate_orders(), cfg);
  const TableResult cubic = rate_table(RateExample::kCubic,
                                       default_rate_orders(), cfg);
  const TableResult xi = xi_table(default_xi_orders(), cfg);
  const TableResult kn = kn_table(default_kn_orders(), default_kn_points(),
                                  cfg);

  // ---- criterion 2: cosine-metric rate against the published column -----
  {
    int rows = 0;
    std::string failed;
    const bool nu_ok = prefix_pass(tent, "nu[", &rows, &failed);
    const bool time_ok = tent.runtime_seconds <= 300.0;
    report(2, nu_ok && time_ok && rows == 6,
           "nu values within 0.5% of the published column",
           fmt("%d/6 rows gated, runtime=%.1fs (limit 300s)%s%s", rows,
               tent.runtime_seconds, failed.empty() ? "" : " off: ",
               failed.c_str()));
  }

  // ---- criterion 3: modulus columns --------------------------------------
  {
    std::string missing, failed;
    int tent_rows = 0, cubic_rows = 0, tent_steps = 0, cubic_steps = 0;
    const bool tent_omega = prefix_pass(tent, "omega[", &tent_rows, &failed);
    const bool cubic_omega = prefix_pass(cubic, "omega[", &cubic_rows,
                                         &failed);
    const bool spread_t =
        label_pass(tent, "omega_transform_over_nu_spread", &missing);
    const bool spread_c =
        label_pass(cubic, "omega_transform_over_nu_spread", &missing);
    const bool steps_t = prefix_pass(tent, "omega_transform_step[",
                                     &tent_steps, &failed);
    const bool steps_c = prefix_pass(cubic, "omega_transform_step[",
                                     &cubic_steps, &failed);
    report(3,
           tent_omega && cubic_omega && spread_t && spread_c && steps_t &&
               steps_c && missing.empty(),
           "modulus columns and transform-modulus substitutes",
           fmt("tent_omega=%s cubic_omega=%s spread=%s/%s ratio_steps=%s/%s "
               "%s%s%s",
               tent_omega ? "ok" : "FAIL", cubic_omega ? "ok" : "FAIL",
               spread_t ? "ok" : "FAIL", spread_c ? "ok" : "FAIL",
               steps_t ? "ok" : "FAIL", steps_c ? "ok" : "FAIL",
               missing.c_str(), failed.empty() ? "" : "off: ",
               failed.c_str()));
  }

  // ---- criterion 4: angle-metric rate table ------------------------------
  {
    int rows = 0;
    std::string failed;
    const bool gated = prefix_pass(xi, "xi[", &rows, &failed);
    // Rows 600..1000 are informational ("info" mode never gates); the five
    // gated rows are 100..500.
    report(4, gated && rows == 5,
           "xi values within 2% of the published rows 100..500",
           fmt("%d gated rows, runtime=%.1fs%s%s", rows, xi.runtime_seconds,
               failed.empty() ? "" : " off: ", failed.c_str()));
  }

  // ---- criterion 5: closed forms against oscillatory quadrature ----------
  {
    Stopwatch watch;
    std::mt19937 rng(20250818u);
    std::uniform_real_distribution<double> pick(-3.0, 3.0);
    double vk_dev = 0.0;
    for (int n = 1; n <= 12; ++n) {
      const ChebyshevGrid grid(n);
      for (int trial = 0; trial < 20; ++trial) {
        const double p = pick(rng);
        for (int k = 1; k <= n; ++k) {
          vk_dev = std::max(vk_dev, std::abs(vk_closed_form(grid, k, p) -
                                             vk_quadrature(grid, k, p)));
        }
      }
    }
    double rr_dev = 0.0;
    const ChebyshevGrid grid12(12);
    const double h = grid12.shift();
    for (int r = 0; r <= 11; ++r) {
      for (int trial = 0; trial < 5; ++trial) {
        const double p = pick(rng);
        QuadratureSpec spec;
        spec.rule = QuadRule::kGaussComposite;
        spec.abs_tol = 1e-10;
        spec.oscillation_freq = r + 3.0 + std::abs(p);
        const std::complex<double> direct = integrate_complex(
            [&](double t) {
              return (std::pow(std::cos(t - h), r) +
                      std::pow(std::cos(t + h), r)) *
                     std::exp(std::complex<double>(0.0, p * t));
            },
            0.0, kPi, spec);
        rr_dev = std::max(rr_dev, std::abs(rr_term(grid12, r, p) - direct));
      }
    }
    const bool pass =
        vk_dev <= 1e-6 && rr_dev <= 1e-6 && watch.seconds() <= 60.0;
    report(5, pass, "closed-form transforms vs quadrature",
           fmt("node_dev=%.3g power_dev=%.3g runtime=%.1fs (limit 60s)",
               vk_dev, rr_dev, watch.seconds()));
  }

  // ---- criterion 6: Gaussian table properties ----------------------------
  {
    std::string missing;
    int stab_rows = 0;
    const bool stab = prefix_pass(kn, "stabilization[", &stab_rows);
    const bool realness = label_pass(kn, "realness[p=1]", &missing);
    const bool symmetry = label_pass(kn, "re_im_symmetry[p=1.5]", &missing);
    const bool convention =
        kn.extra_json.find("best_convention") != std::string::npos;
    report(6,
           stab && stab_rows == 3 && realness && symmetry && convention &&
               missing.empty(),
           "Gaussian windowed-transform table properties",
           fmt("stabilization=%s(%d pts) realness=%s re/im=%s "
               "convention_in_manifest=%s runtime=%.1fs",
               stab ? "ok" : "FAIL", stab_rows, realness ? "ok" : "FAIL",
               symmetry ? "ok" : "FAIL", convention ? "yes" : "NO",
               kn.runtime_seconds));
  }

  // ---- property suites used by criteria 7-11 ------------------------------
  const TableResult gsuite = grunwald_suite(cfg);
  const TableResult ksuite = kantorovich_suite(cfg);

  // ---- criterion 7: windowed-operator L1 rate -----------------------------
  {
    std::string missing;
    const bool decreasing =
        label_pass(gsuite, "windowed_l1_error_decreasing", &missing);
    const bool band = label_pass(gsuite, "windowed_l1_xi_ratio_band",
                                 &missing);
    report(7, decreasing && band && missing.empty(),
           "windowed L1 error decreases and tracks xi",
           fmt("decreasing=%s ratio_band=%s %s", decreasing ? "ok" : "FAIL",
               band ? "ok" : "FAIL", missing.c_str()));
  }

  // ---- criterion 8: smoothed operator -------------------------------------
  {
    std::string missing;
    const bool identity =
        label_pass(gsuite, "smoothed_identity_max_dev", &missing);
    const bool decay =
        label_pass(gsuite, "smoothed_l1_error_decreasing", &missing);
    report(8, identity && decay && missing.empty(),
           "smoothed operator: product identity and L1 decay",
           fmt("identity=%s decay=%s %s", identity ? "ok" : "FAIL",
               decay ? "ok" : "FAIL", missing.c_str()));
  }

  // ---- criterion 9: cell-averaging families -------------------------------
  {
    std::string missing;
    bool pass = true;
    for (const char* label :
         {"moment_closed_form_max_dev", "alternating_mass_l1[n=7]",
          "half_dyadic_witness_agreement", "half_dyadic_witness_negative",
          "alternating_witness_value", "half_dyadic_norm_max",
          "characteristic_classical_final",
          "characteristic_classical_from_below",
          "characteristic_alternating_final"}) {
      pass = label_pass(ksuite, label, &missing) && pass;
    }
    for (const char* label :
         {"negativity_witness[n=3]", "negativity_witness[n=5]"}) {
      pass = label_pass(gsuite, label, &missing) && pass;
    }
    report(9, pass && missing.empty(),
           "cell-averaging families: moments, witnesses, norms, limits",
           missing.empty() ? "all checks green" : missing);
  }

  // ---- criterion 10: second-moment rate and commutator bound -------------
  {
    std::string missing;
    bool pass = true;
    for (const char* label :
         {"mu_decreasing", "mu_final", "mu_bound_inequality_max_slack"}) {
      pass = label_pass(ksuite, label, &missing) && pass;
    }
    const GoldenCheck* mu_final = find_check(ksuite, "mu_final");
    report(10, pass && missing.empty(),
           "mu rate decreases and drives the quantitative bound",
           fmt("mu_final=%.4g %s", mu_final ? mu_final->value : -1.0,
               missing.c_str()));
  }

  // ---- criterion 11: uniform norm bound ------------------------------------
  {
    std::string missing;
    const bool bounded = label_pass(gsuite, "norm_sweep_max", &missing);
    const bool tail =
        label_pass(gsuite, "norm_tail_monotone_growth", &missing);
    const GoldenCheck* c1 = find_check(gsuite, "norm_sweep_max");
    report(11, bounded && tail && missing.empty(),
           "dyadic norm sweep bounded with flattening tail",
           fmt("max_norm=%.6f (bound 5) tail=%s %s", c1 ? c1->value : -1.0,
               tail ? "flattening" : "GROWING", missing.c_str()));
  }

  std::printf("acceptance: %d/11 criteria passed\n", 11 - g_failures);
  return g_failures;
}
