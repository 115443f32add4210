#include "kantorovich/kantorovich.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "core/errors.hpp"
#include "core/l1.hpp"
#include "core/modulus.hpp"

namespace grunwald {

namespace {

constexpr double kEdgeSlack = 1e-12;

void check_unit_arg(double x, const char* who) {
  if (!(x >= -kEdgeSlack && x <= 1.0 + kEdgeSlack)) {
    throw InvalidArgumentError(std::string(who) + ": x must lie in [0, 1]");
  }
}

// q^e with the 0^0 = 1 convention used by the moment closed forms.
double pow_or_one(double q, int e) {
  if (e == 0) return 1.0;
  return std::pow(q, e);
}

RealFunction zero_image(const RealFunction& f) {
  RealFunction img;
  img.name = "zero(" + f.name + ")";
  img.eval = [](double) { return 0.0; };
  img.domain = {0.0, 1.0};
  img.smoothness = Smoothness::kC2;
  img.cell_integral = [](double, double) { return 0.0; };
  return img;
}

// A(f)(x) = f(x/2), the limit of the half-dyadic family.
RealFunction half_scale_image(const RealFunction& f) {
  RealFunction img;
  img.name = "half_scale(" + f.name + ")";
  auto eval = f.eval;
  img.eval = [eval](double x) { return eval(0.5 * x); };
  img.domain = {0.0, 1.0};
  img.smoothness = f.smoothness;
  for (double b : f.breakpoints) {
    const double x = 2.0 * b;
    if (x > 0.0 && x < 1.0) img.breakpoints.push_back(x);
  }
  if (f.has_cell_integral()) {
    auto cell = f.cell_integral;
    img.cell_integral = [cell](double a, double b) {
      return 2.0 * cell(0.5 * a, 0.5 * b);
    };
  }
  return img;
}

// Integral of fn over [0,1], split at the interior breakpoints.  Quadrature
// nodes are pulled a hair inside each piece so that jumps sitting exactly at
// a cut are sampled as one-sided limits.
double integrate_piecewise(const std::function<double(double)>& fn,
                           const std::vector<double>& breakpoints,
                           const QuadratureSpec& spec) {
  std::vector<double> cuts{0.0, 1.0};
  for (double b : breakpoints) {
    if (b > 0.0 && b < 1.0) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  double acc = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (!(b > a)) continue;
    const double inset = (b - a) * 1e-12;
    acc += integrate(
        [&fn, a, b, inset](double x) {
          if (x <= a) x = a + inset;
          else if (x >= b) x = b - inset;
          return fn(x);
        },
        a, b, spec);
  }
  return acc;
}

void append_breakpoints(std::vector<double>* into, const RealFunction& f) {
  into->insert(into->end(), f.breakpoints.begin(), f.breakpoints.end());
}

}  // namespace

DyadicIndicator dyadic_indicator(int n) {
  if (n < 1) {
    throw InvalidArgumentError("dyadic_indicator: order must be >= 1");
  }
  int m = 0;
  while ((2 << m) <= n) ++m;  // largest m with 2^m <= n
  const double scale = static_cast<double>(1 << m);
  DyadicIndicator d;
  d.m = m;
  d.lo = (n - scale) / scale;
  d.hi = (n - scale + 1.0) / scale;
  return d;
}

CellAveragedOperator::CellAveragedOperator(WeightFamily family, int order,
                                           const RealFunction& f,
                                           const QuadratureSpec& spec)
    : family_(family), n_(order) {
  if (order < 1 || order > kMaxOrder) {
    throw InvalidArgumentError(
        "CellAveragedOperator: order must be in [1, 2000]");
  }
  a_n_ = dyadic_indicator(order);
  const int n = n_;
  scaled_cell_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double a = static_cast<double>(k) / (n + 1);
    const double b = static_cast<double>(k + 1) / (n + 1);
    double cell;
    if (f.has_cell_integral()) {
      cell = f.cell_integral(a, b);
    } else {
      cell = integrate(f.eval, a, b, spec);
    }
    if (!std::isfinite(cell)) {
      throw EvaluationError("CellAveragedOperator: non-finite cell average");
    }
    scaled_cell_[k] = (n + 1) * cell;
  }
  log_choose_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    log_choose_[k] = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                     std::lgamma(n - k + 1.0);
  }
}

double CellAveragedOperator::apply(double x) const {
  check_unit_arg(x, "CellAveragedOperator::apply");
  x = x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
  const int n = n_;
  switch (family_) {
    case WeightFamily::kClassical:
    case WeightFamily::kAlternatingSign: {
      const bool alternating = family_ == WeightFamily::kAlternatingSign;
      if (x == 0.0) return scaled_cell_[0];
      if (x == 1.0) {
        const double sign = (alternating && n % 2 == 1) ? -1.0 : 1.0;
        return sign * scaled_cell_[n];
      }
      const double lu = std::log(x), lv = std::log1p(-x);
      double acc = 0.0;
      for (int k = 0; k <= n; ++k) {
        const double w = std::exp(log_choose_[k] + k * lu + (n - k) * lv);
        const double sign = (alternating && k % 2 == 1) ? -1.0 : 1.0;
        acc += sign * w * scaled_cell_[k];
      }
      return acc;
    }
    case WeightFamily::kHalfDyadic: {
      const double a = a_n_(x);
      const double u = 0.5 * x;
      if (a == 0.0) {
        // Weights C(n,k) u^k v^{n-k} with v = 1 - u >= 1/2 > 0.
        if (x == 0.0) return scaled_cell_[0];
        const double lu = std::log(u), lv = std::log1p(-u);
        double acc = 0.0;
        for (int k = 0; k <= n; ++k) {
          acc += std::exp(log_choose_[k] + k * lu + (n - k) * lv) *
                 scaled_cell_[k];
        }
        return acc;
      }
      // a = 1: v = -u, so w_k = C(n,k) u^n (-1)^{n-k}.
      if (x == 0.0) return 0.0;
      const double lmag = n * std::log(u);
      double acc = 0.0;
      for (int k = 0; k <= n; ++k) {
        const double sign = ((n - k) % 2 == 1) ? -1.0 : 1.0;
        acc += sign * std::exp(log_choose_[k] + lmag) * scaled_cell_[k];
      }
      return acc;
    }
  }
  throw InvalidArgumentError("CellAveragedOperator: unknown family");
}

double apply_kantorovich(int order, const RealFunction& f, double x) {
  return CellAveragedOperator(WeightFamily::kClassical, order, f).apply(x);
}
double apply_an(int order, const RealFunction& f, double x) {
  return CellAveragedOperator(WeightFamily::kHalfDyadic, order, f).apply(x);
}
double apply_bn(int order, const RealFunction& f, double x) {
  return CellAveragedOperator(WeightFamily::kAlternatingSign, order, f)
      .apply(x);
}

double kantorovich_moment(int order, int j, double x) {
  check_unit_arg(x, "kantorovich_moment");
  if (order < 1) {
    throw InvalidArgumentError("kantorovich_moment: order must be >= 1");
  }
  const double n = order;
  const double np1 = n + 1.0;
  switch (j) {
    case 0:
      return 1.0;
    case 1:
      return (n * x + 0.5) / np1;
    case 2:
      return (n * (n - 1.0) * x * x + 2.0 * n * x + 1.0 / 3.0) / (np1 * np1);
    default:
      throw InvalidArgumentError("kantorovich_moment: j must be 0, 1 or 2");
  }
}

double an_moment(int order, int j, double x) {
  check_unit_arg(x, "an_moment");
  if (order < 1) throw InvalidArgumentError("an_moment: order must be >= 1");
  const double n = order;
  const double np1 = n + 1.0;
  const double q = 1.0 - dyadic_indicator(order)(x);
  switch (j) {
    case 0:
      return pow_or_one(q, order);
    case 1:
      return 0.5 * n * x / np1 * pow_or_one(q, order - 1) +
             0.5 * pow_or_one(q, order) / np1;
    case 2: {
      const double t2 = (order >= 2) ? 0.25 * n * (n - 1.0) * x * x *
                                           pow_or_one(q, order - 2)
                                     : 0.0;
      return (t2 + n * x * pow_or_one(q, order - 1) +
              pow_or_one(q, order) / 3.0) /
             (np1 * np1);
    }
    default:
      throw InvalidArgumentError("an_moment: j must be 0, 1 or 2");
  }
}

double bn_moment(int order, int j, double x) {
  check_unit_arg(x, "bn_moment");
  if (order < 1) throw InvalidArgumentError("bn_moment: order must be >= 1");
  const double n = order;
  const double np1 = n + 1.0;
  const double s = 1.0 - 2.0 * x;
  switch (j) {
    case 0:
      return pow_or_one(s, order);
    case 1:
      return -n * x / np1 * pow_or_one(s, order - 1) +
             0.5 * pow_or_one(s, order) / np1;
    case 2: {
      const double t2 = (order >= 2)
                            ? n * (n - 1.0) * x * x * pow_or_one(s, order - 2)
                            : 0.0;
      return (t2 - 2.0 * n * x * pow_or_one(s, order - 1) +
              pow_or_one(s, order) / 3.0) /
             (np1 * np1);
    }
    default:
      throw InvalidArgumentError("bn_moment: j must be 0, 1 or 2");
  }
}

L1Operator make_identity_operator() {
  L1Operator op;
  op.name = "identity";
  op.lift = [](const RealFunction& f) { return f; };
  op.target = op.lift;
  return op;
}

L1Operator make_zero_operator() {
  L1Operator op;
  op.name = "zero";
  op.lift = [](const RealFunction& f) { return zero_image(f); };
  op.target = op.lift;
  return op;
}

L1Operator make_cell_operator(WeightFamily family, int order,
                              const QuadratureSpec& spec) {
  L1Operator op;
  switch (family) {
    case WeightFamily::kClassical:
      op.name = "cell_classical_" + std::to_string(order);
      op.target = [](const RealFunction& f) { return f; };
      break;
    case WeightFamily::kHalfDyadic:
      op.name = "cell_half_dyadic_" + std::to_string(order);
      op.target = [](const RealFunction& f) { return half_scale_image(f); };
      break;
    case WeightFamily::kAlternatingSign:
      op.name = "cell_alternating_" + std::to_string(order);
      op.target = [](const RealFunction& f) { return zero_image(f); };
      break;
  }
  op.lift = [family, order, spec](const RealFunction& f) {
    auto impl = std::make_shared<CellAveragedOperator>(family, order, f, spec);
    RealFunction img;
    img.name = "image(" + f.name + ")";
    img.eval = [impl](double x) { return impl->apply(x); };
    img.domain = {0.0, 1.0};
    img.smoothness = Smoothness::kC2;
    if (family == WeightFamily::kHalfDyadic) {
      // The dyadic step makes the image discontinuous at the cell edges.
      const DyadicIndicator d = dyadic_indicator(order);
      img.smoothness = Smoothness::kPiecewiseContinuous;
      img.breakpoints = {d.lo, d.hi};
    }
    return img;
  };
  return op;
}

double l1_operator_norm_bound(const L1Operator& op,
                              const std::vector<RealFunction>& probes,
                              const QuadratureSpec& spec) {
  if (probes.empty()) {
    throw InvalidArgumentError("l1_operator_norm_bound: no probes");
  }
  const Interval unit{0.0, 1.0};
  double worst = 0.0;
  for (const RealFunction& f : probes) {
    const double denom = l1_norm_piecewise(f.eval, unit, f.breakpoints, spec);
    if (denom <= 1e-14) {
      throw InvalidArgumentError(
          "l1_operator_norm_bound: probe has (near-)zero L1 norm");
    }
    const RealFunction img = op.lift(f);
    const double numer =
        l1_norm_piecewise(img.eval, unit, img.breakpoints, spec);
    const double ratio = numer / denom;
    if (ratio > worst) worst = ratio;
  }
  return worst;
}

double mu_rate(const L1Operator& ln, const QuadratureSpec& spec) {
  const RealFunction e0 = monomial(0), e1 = monomial(1), e2 = monomial(2);
  const RealFunction ln0 = ln.lift(e0), ln1 = ln.lift(e1), ln2 = ln.lift(e2);
  const RealFunction l0 = ln.target(e0), l1 = ln.target(e1),
                     l2 = ln.target(e2);
  std::vector<double> breaks;
  for (const RealFunction* g : {&ln0, &ln1, &ln2, &l0, &l1, &l2}) {
    append_breakpoints(&breaks, *g);
  }
  const double mu2 = integrate_piecewise(
      [&](double x) {
        return ln2.eval(x) * l0.eval(x) - 2.0 * ln1.eval(x) * l1.eval(x) +
               ln0.eval(x) * l2.eval(x);
      },
      breaks, spec);
  if (mu2 < -1e-8) {
    throw EvaluationError(
        "mu_rate: negative second moment; operator and limit are mismatched "
        "or the operator is not positive");
  }
  return std::sqrt(mu2 > 0.0 ? mu2 : 0.0);
}

MuBoundReport mu_bound_report(const L1Operator& ln, const RealFunction& f,
                              const QuadratureSpec& spec) {
  MuBoundReport report;
  report.mu = mu_rate(ln, spec);

  const RealFunction e0 = monomial(0);
  const RealFunction lnf = ln.lift(f), lne0 = ln.lift(e0);
  const RealFunction lf = ln.target(f), le0 = ln.target(e0);

  std::vector<double> breaks;
  for (const RealFunction* g : {&lnf, &lne0, &lf, &le0}) {
    append_breakpoints(&breaks, *g);
  }
  report.lhs = l1_norm_piecewise(
      [&](double x) {
        return lnf.eval(x) * le0.eval(x) - lne0.eval(x) * lf.eval(x);
      },
      Interval{0.0, 1.0}, breaks, spec);

  std::vector<double> factor_breaks;
  append_breakpoints(&factor_breaks, lne0);
  append_breakpoints(&factor_breaks, le0);
  const double factor =
      integrate_piecewise(
          [&](double x) { return lne0.eval(x) * le0.eval(x); },
          factor_breaks, spec) +
      1.0;

  const double omega_step = f.domain.length() * 1e-5;
  const double omega =
      modulus_of_continuity(f.eval, f.domain, report.mu, omega_step);
  report.rhs = factor * omega;
  report.holds = report.lhs <= report.rhs + 1e-12;
  return report;
}

CharacteristicReport characteristic_condition_check(
    const std::function<L1Operator(int)>& ln_family, const L1Operator& l,
    const Interval& g_interval, const std::vector<int>& orders,
    const QuadratureSpec& spec) {
  if (!(g_interval.lo >= 0.0 && g_interval.hi <= 1.0)) {
    throw InvalidArgumentError(
        "characteristic_condition_check: g_interval must lie inside [0, 1]");
  }
  g_interval.require_nonempty("characteristic_condition_check");
  if (orders.empty()) {
    throw InvalidArgumentError(
        "characteristic_condition_check: orders must be nonempty");
  }
  const RealFunction g = indicator(g_interval.lo, g_interval.hi, {0.0, 1.0});
  const RealFunction lg = l.lift(g);

  CharacteristicReport report;
  report.g_norm = g_interval.length();
  report.orders = orders;
  report.residues.reserve(orders.size());
  for (int n : orders) {
    const L1Operator ln = ln_family(n);
    const RealFunction img = ln.lift(g);
    std::vector<double> breaks;
    append_breakpoints(&breaks, img);
    append_breakpoints(&breaks, lg);
    append_breakpoints(&breaks, g);
    report.residues.push_back(l1_norm_piecewise(
        [&](double x) { return img.eval(x) - lg.eval(x) + g.eval(x); },
        Interval{0.0, 1.0}, breaks, spec));
  }
  report.final_within_bound =
      report.residues.back() <= report.g_norm + 0.02;
  return report;
}

}  // namespace grunwald
