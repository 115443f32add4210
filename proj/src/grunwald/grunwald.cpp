#include "grunwald/grunwald.hpp"

#include <cmath>
#include <memory>

#include "core/constants.hpp"
#include "core/errors.hpp"
#include "core/modulus.hpp"

namespace grunwald {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_theta(double theta) {
  if (!(theta >= -kDomainSlack && theta <= kPi + kDomainSlack)) {
    throw InvalidArgumentError(
        "apply_interp_mean: theta must lie in [0, pi]");
  }
}

// Mean with node samples fixed up front; shares one scratch row.
class AppliedMean {
 public:
  AppliedMean(const ChebyshevGrid& grid, std::vector<double> samples)
      : grid_(grid), samples_(std::move(samples)), row_(grid.order()) {}

  double operator()(double theta) const {
    shifted_pair_row(grid_, theta, row_.data());
    double acc = 0.0;
    for (int k = 0; k < grid_.order(); ++k) acc += samples_[k] * row_[k];
    return 0.5 * acc;
  }

 private:
  const ChebyshevGrid& grid_;
  std::vector<double> samples_;
  mutable std::vector<double> row_;
};

std::vector<double> sample_at_nodes(const ChebyshevGrid& grid,
                                    const std::function<double(double)>& f,
                                    double node_offset = 0.0) {
  std::vector<double> s(grid.order());
  for (int k = 1; k <= grid.order(); ++k) {
    double v = f(grid.angle(k) + node_offset);
    if (!std::isfinite(v)) {
      throw EvaluationError("interpolation mean: non-finite node sample");
    }
    s[k - 1] = v;
  }
  return s;
}

enum class RowWeight { kOne, kCosDistance, kAngleDistance };

double weighted_row_value(const ChebyshevGrid& grid, RowWeight w, double theta,
                          std::vector<double>& scratch) {
  shifted_pair_row(grid, theta, scratch.data());
  double acc = 0.0;
  const int n = grid.order();
  switch (w) {
    case RowWeight::kOne:
      for (int k = 0; k < n; ++k) acc += std::fabs(scratch[k]);
      break;
    case RowWeight::kCosDistance: {
      const double ct = std::cos(theta);
      const auto& c = grid.cosines();
      for (int k = 0; k < n; ++k) {
        acc += std::fabs(c[k] - ct) * std::fabs(scratch[k]);
      }
      break;
    }
    case RowWeight::kAngleDistance: {
      const auto& t = grid.angles();
      for (int k = 0; k < n; ++k) {
        acc += std::fabs(t[k] - theta) * std::fabs(scratch[k]);
      }
      break;
    }
  }
  return 0.5 * acc;
}

SupResult weighted_row_sup(const ChebyshevGrid& grid, RowWeight w,
                           double grid_step) {
  std::vector<double> scratch(grid.order());
  auto value = [&](double theta) {
    return weighted_row_value(grid, w, theta, scratch);
  };
  return sup_on_interval(value, Interval{0.0, kPi}, grid_step);
}

double sup_abs_error(const std::function<double(double)>& approx,
                     const std::function<double(double)>& target,
                     const Interval& I, double grid_step) {
  auto err = [&](double x) { return std::fabs(approx(x) - target(x)); };
  return sup_on_interval(err, I, grid_step).value;
}

}  // namespace

double apply_interp_mean(const ChebyshevGrid& grid,
                         const std::function<double(double)>& f,
                         double theta) {
  check_theta(theta);
  AppliedMean mean(grid, sample_at_nodes(grid, f));
  return mean(theta);
}

double apply_interp_mean_extended(const ChebyshevGrid& grid,
                                  const std::function<double(double)>& f,
                                  double theta) {
  if (!std::isfinite(theta)) {
    throw InvalidArgumentError(
        "apply_interp_mean_extended: theta must be finite");
  }
  // Identify the period cell [j pi, (j+1) pi] and fold back to [0, pi]; the
  // node pattern translates with the cell.
  double j = std::floor(theta / kPi);
  double eta = theta - j * kPi;
  if (eta > kPi) {  // guards roundoff when theta is a hair below a seam
    eta = kPi;
  }
  AppliedMean mean(grid, sample_at_nodes(grid, f, j * kPi));
  return mean(eta);
}

double lebesgue_function(const ChebyshevGrid& grid, double theta) {
  std::vector<double> scratch(grid.order());
  return weighted_row_value(grid, RowWeight::kOne, theta, scratch);
}

SupResult operator_norm(const ChebyshevGrid& grid, double grid_step) {
  return weighted_row_sup(grid, RowWeight::kOne, grid_step);
}

double nu_rate(const ChebyshevGrid& grid, double grid_step) {
  return weighted_row_sup(grid, RowWeight::kCosDistance, grid_step).value;
}

double xi_rate(const ChebyshevGrid& grid, double grid_step) {
  return weighted_row_sup(grid, RowWeight::kAngleDistance, grid_step).value;
}

BoundReport quantitative_bound_report(const ChebyshevGrid& grid,
                                      BoundFlavor flavor,
                                      const RealFunction& f, double c1,
                                      double grid_step) {
  if (!(c1 > 0.0)) {
    throw InvalidArgumentError(
        "quantitative_bound_report: c1 must be positive");
  }
  BoundReport rep;
  const Interval angle_dom{0.0, kPi};
  // Modulus grids resolve the same relative scale as the sup grid.
  const double rel = grid_step / kPi;
  switch (flavor) {
    case BoundFlavor::kCosComposed: {
      auto composed = [&f](double theta) { return f(std::cos(theta)); };
      AppliedMean mean(grid, sample_at_nodes(grid, composed));
      rep.lhs = sup_abs_error([&](double t) { return mean(t); }, composed,
                              angle_dom, grid_step);
      rep.delta = nu_rate(grid, grid_step);
      double w = modulus_of_continuity(f.eval, f.domain, rep.delta,
                                       f.domain.length() * rel);
      rep.rhs = (c1 + 1.0) * w;
      break;
    }
    case BoundFlavor::kAngleDirect: {
      AppliedMean mean(grid, sample_at_nodes(grid, f.eval));
      rep.lhs = sup_abs_error([&](double t) { return mean(t); }, f.eval,
                              angle_dom, grid_step);
      rep.delta = xi_rate(grid, grid_step);
      double w = modulus_of_continuity(f.eval, angle_dom, rep.delta,
                                       kPi * rel);
      rep.rhs = (c1 + 1.0) * w;
      break;
    }
    case BoundFlavor::kAngleDerivative: {
      if (!f.has_derivative()) {
        throw InvalidArgumentError(
            "quantitative_bound_report: derivative flavor needs f.derivative");
      }
      AppliedMean mean(grid, sample_at_nodes(grid, f.eval));
      rep.lhs = sup_abs_error([&](double t) { return mean(t); }, f.eval,
                              angle_dom, grid_step);
      rep.delta = xi_rate(grid, grid_step);
      double dsup =
          sup_on_interval([&](double t) { return std::fabs(f.derivative(t)); },
                          angle_dom, grid_step)
              .value;
      double w = modulus_of_continuity(f.derivative, angle_dom, rep.delta,
                                       kPi * rel);
      rep.rhs = dsup * rep.delta + kTwoPi * (c1 + 1.0) * w;
      break;
    }
  }
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

Witness nonpositivity_witness(const ChebyshevGrid& grid, double grid_step) {
  const int n = grid.order();
  const double center = grid.angle(n);
  const double inv_halfwidth = n / kPi;
  auto hat = [center, inv_halfwidth](double theta) {
    double v = 1.0 - std::fabs(theta - center) * inv_halfwidth;
    return v > 0.0 ? v : 0.0;
  };
  AppliedMean mean(grid, sample_at_nodes(grid, hat));
  SupResult deepest = sup_on_interval(
      [&](double t) { return -mean(t); }, Interval{0.0, kPi}, grid_step);
  if (deepest.value <= 1e-12) {
    throw WitnessNotFoundError(
        "nonpositivity_witness: mean of the hat stays nonnegative (the "
        "order-1 mean is positive)");
  }
  return Witness{deepest.arg, -deepest.value};
}

std::vector<ConvergenceRow> convergence_report(const std::vector<int>& orders,
                                               double grid_step) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(orders.size());
  const Interval dom{0.0, kPi};
  for (int n : orders) {
    ChebyshevGrid grid(n);
    ConvergenceRow row;
    row.n = n;
    {
      AppliedMean mean(grid, std::vector<double>(n, 1.0));
      row.err_one = sup_abs_error([&](double t) { return mean(t); },
                                  [](double) { return 1.0; }, dom, grid_step);
    }
    {
      AppliedMean mean(grid,
                       sample_at_nodes(grid, [](double t) { return std::cos(t); }));
      row.err_cos = sup_abs_error([&](double t) { return mean(t); },
                                  [](double t) { return std::cos(t); }, dom,
                                  grid_step);
      const double damp = std::cos(grid.shift());
      row.residual_identity =
          sup_on_interval(
              [&](double t) { return std::fabs(mean(t) - std::cos(t) * damp); },
              dom, grid_step)
              .value;
    }
    {
      AppliedMean mean(grid, sample_at_nodes(grid, [](double t) {
                         double c = std::cos(t);
                         return c * c;
                       }));
      row.err_cos_sq = sup_abs_error(
          [&](double t) { return mean(t); },
          [](double t) {
            double c = std::cos(t);
            return c * c;
          },
          dom, grid_step);
    }
    rows.push_back(row);
  }
  return rows;
}

NormSweep norm_sweep(const std::vector<int>& orders, double grid_step) {
  NormSweep sweep;
  sweep.orders = orders;
  sweep.norms.resize(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) {
    ChebyshevGrid grid(orders[i]);
    sweep.norms[i] = operator_norm(grid, grid_step).value;
    if (sweep.norms[i] > sweep.c1) sweep.c1 = sweep.norms[i];
  }
  return sweep;
}

}  // namespace grunwald
