#include "core/quadrature.hpp"

#include <cmath>

#include "core/constants.hpp"
#include <map>
#include <mutex>

namespace grunwald {

namespace {

bool finite(double v) { return std::isfinite(v); }
bool finite(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

double norm_of(double v) { return std::fabs(v); }
double norm_of(const std::complex<double>& v) { return std::abs(v); }

void fill_best(double v, double& re, double& im) {
  re = v;
  im = 0.0;
}
void fill_best(const std::complex<double>& v, double& re, double& im) {
  re = v.real();
  im = v.imag();
}

template <class T>
T checked_eval(const std::function<T(double)>& f, double x) {
  T v = f(x);
  if (!finite(v)) {
    throw EvaluationError("integrate: integrand is non-finite at x=" +
                          std::to_string(x));
  }
  return v;
}

// One adaptive Simpson step: [a, b] with cached endpoint/midpoint values, the
// whole-interval Simpson estimate, and the remaining tolerance budget.
template <class T>
T adaptive_simpson_rec(const std::function<T(double)>& f, double a, double b,
                       T fa, T fm, T fb, T whole, double tol, int depth,
                       bool& converged) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  T flm = checked_eval(f, lm);
  T frm = checked_eval(f, rm);
  double h6 = (b - a) / 12.0;
  T left = (fa + 4.0 * flm + fm) * h6;
  T right = (fm + 4.0 * frm + fb) * h6;
  T sum = left + right;
  T diff = sum - whole;
  if (norm_of(diff) <= 15.0 * tol || depth <= 0) {
    if (depth <= 0 && norm_of(diff) > 15.0 * tol) converged = false;
    return sum + diff / 15.0;  // Richardson correction
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1,
                              converged) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol,
                              depth - 1, converged);
}

template <class T>
T adaptive_simpson(const std::function<T(double)>& f, double a, double b,
                   const QuadratureSpec& spec) {
  T fa = checked_eval(f, a);
  T fb = checked_eval(f, b);
  double m = 0.5 * (a + b);
  T fm = checked_eval(f, m);
  T whole = (fa + 4.0 * fm + fb) * ((b - a) / 6.0);
  bool converged = true;
  T result = adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, spec.abs_tol,
                                  spec.max_refinement, converged);
  if (!converged) {
    double re, im;
    fill_best(result, re, im);
    throw ToleranceError(
        "integrate: adaptive Simpson hit its depth limit before reaching "
        "abs_tol",
        re, im, spec.abs_tol);
  }
  return result;
}

template <class T>
T gauss_panels(const std::function<T(double)>& f, double a, double b,
               int panels, const GaussRule& rule) {
  T total{};
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    double c = lo + 0.5 * h;
    double half = 0.5 * h;
    T acc{};
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * checked_eval(f, c + half * rule.nodes[i]);
    }
    total += acc * half;
  }
  return total;
}

template <class T>
T gauss_composite(const std::function<T(double)>& f, double a, double b,
                  const QuadratureSpec& spec) {
  const GaussRule& rule = gauss_legendre(spec.gauss_points);
  int panels = 1;
  if (spec.oscillation_freq > 0.0) {
    double periods = spec.oscillation_freq * (b - a) / (2.0 * kPi);
    panels = static_cast<int>(
        std::ceil(std::max(1.0, periods * spec.panels_per_period)));
  } else {
    panels = 8;
  }
  T prev = gauss_panels(f, a, b, panels, rule);
  // Panel doubling is geometric in cost, so bound the rounds independently of
  // the Simpson depth budget.
  const int rounds = spec.max_refinement < 16 ? spec.max_refinement : 16;
  for (int round = 0; round < rounds; ++round) {
    panels *= 2;
    T next = gauss_panels(f, a, b, panels, rule);
    if (norm_of(next - prev) <= spec.abs_tol) return next;
    prev = next;
  }
  double re, im;
  fill_best(prev, re, im);
  throw ToleranceError(
      "integrate: composite Gauss rule did not converge within the "
      "panel-doubling budget",
      re, im, spec.abs_tol);
}

template <class T>
T integrate_impl(const std::function<T(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    throw InvalidArgumentError("integrate: need finite a <= b");
  }
  if (spec.abs_tol <= 0.0) {
    throw InvalidArgumentError("integrate: abs_tol must be positive");
  }
  if (spec.gauss_points < 2 || spec.gauss_points > 64) {
    throw InvalidArgumentError("integrate: gauss_points must be in [2, 64]");
  }
  if (a == b) return T{};
  switch (spec.rule) {
    case QuadRule::kAdaptiveSimpson:
      return adaptive_simpson(f, a, b, spec);
    case QuadRule::kGaussComposite:
      return gauss_composite(f, a, b, spec);
  }
  throw InvalidArgumentError("integrate: unknown rule");
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  return integrate_impl(f, a, b, spec);
}

std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec) {
  return integrate_impl(f, a, b, spec);
}

const GaussRule& gauss_legendre(int points) {
  if (points < 2 || points > 64) {
    throw InvalidArgumentError("gauss_legendre: points must be in [2, 64]");
  }
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(points);
  if (it != cache.end()) return it->second;

  // Newton iteration on the Legendre polynomial P_n; nodes are its roots,
  // weights are 2 / ((1 - x^2) P_n'(x)^2).
  GaussRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  int n = points;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  auto [pos, inserted] = cache.emplace(points, std::move(rule));
  (void)inserted;
  return pos->second;
}

}  // namespace grunwald
