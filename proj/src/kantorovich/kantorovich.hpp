#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/interval.hpp"
#include "core/quadrature.hpp"
#include "core/real_function.hpp"

namespace grunwald {

/// Weight family of a cell-averaging operator on [0, 1] of order n.  All
/// three share the cell averages  (n+1) Int_{k/(n+1)}^{(k+1)/(n+1)} f  and
/// differ in the polynomial weights w_k(x):
///  - kClassical:      w_k = C(n,k) x^k (1-x)^{n-k}                  (positive)
///  - kHalfDyadic:     w_k = C(n,k) (x/2)^k (1 - a_n(x) - x/2)^{n-k}
///                     with a_n the dyadic indicator step              (signed)
///  - kAlternatingSign:w_k = C(n,k) (-x)^k (1-x)^{n-k}                (signed)
/// Their limits in L^1[0,1] differ as well: the classical family converges to
/// the identity, the half-dyadic family to f(x/2), and the alternating-sign
/// family to 0.
enum class WeightFamily {
  kClassical,
  kHalfDyadic,
  kAlternatingSign,
};

/// Dyadic indicator cell of order n: with 2^m <= n < 2^{m+1}, the interval
/// [(n - 2^m)/2^m, (n - 2^m + 1)/2^m]; a_n(x) = 1 on it, else 0.
struct DyadicIndicator {
  int m = 0;
  double lo = 0.0;
  double hi = 0.0;
  double operator()(double x) const { return (x >= lo && x <= hi) ? 1.0 : 0.0; }
};
DyadicIndicator dyadic_indicator(int n);

/// Default quadrature for the cell averages (tight tolerance; only consulted
/// when the probe function does not carry an exact cell_integral).
inline QuadratureSpec cell_quadrature_spec() {
  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  return spec;
}

/// A cell-averaging operator of one of the three weight families.  Cell
/// averages of f are computed once at construction (exactly when f carries a
/// cell_integral, otherwise by adaptive quadrature); apply(x) then costs one
/// weight sweep in log-space with sign tracking.
class CellAveragedOperator {
 public:
  CellAveragedOperator(WeightFamily family, int order, const RealFunction& f,
                       const QuadratureSpec& spec = cell_quadrature_spec());

  double apply(double x) const;  // x in [0, 1]
  int order() const { return n_; }
  WeightFamily family() const { return family_; }

  static constexpr int kMaxOrder = 2000;

 private:
  WeightFamily family_;
  int n_;
  DyadicIndicator a_n_;
  std::vector<double> scaled_cell_;  // (n+1) * cell integral of f
  std::vector<double> log_choose_;   // log C(n, k)
};

/// Convenience single-point evaluations.
double apply_kantorovich(int order, const RealFunction& f, double x);
double apply_an(int order, const RealFunction& f, double x);
double apply_bn(int order, const RealFunction& f, double x);

/// Closed-form moments (action on e_j, j = 0, 1, 2) of the three families.
double kantorovich_moment(int order, int j, double x);
double an_moment(int order, int j, double x);
double bn_moment(int order, int j, double x);

/// An operator viewed as acting L^1[0,1] -> L^1[0,1] together with its limit
/// operator.  `lift` binds a probe function and returns the image L_n(f) as a
/// RealFunction (with breakpoints set, e.g. the dyadic cell edges of the
/// half-dyadic family) so repeated evaluations reuse the precomputed cell
/// averages; `target` does the same for the limit operator L.
struct L1Operator {
  std::string name;
  std::function<RealFunction(const RealFunction&)> lift;    // f -> L_n(f)
  std::function<RealFunction(const RealFunction&)> target;  // f -> L(f)
};

L1Operator make_identity_operator();
L1Operator make_zero_operator();
L1Operator make_cell_operator(WeightFamily family, int order,
                              const QuadratureSpec& spec =
                                  cell_quadrature_spec());

/// Largest L^1 -> L^1 ratio  ||L f||_1 / ||f||_1  observed over the probes —
/// an empirical lower bound on the operator norm.
double l1_operator_norm_bound(const L1Operator& op,
                              const std::vector<RealFunction>& probes,
                              const QuadratureSpec& spec = {});

/// The second-moment rate of ln against its own limit operator L:
///     mu^2 = Int_0^1 [L_n(e2) L(e0) - 2 L_n(e1) L(e1) + L_n(e0) L(e2)] dx,
/// clamped at 0 before the square root to absorb roundoff.  A value below
/// -1e-8 signals mismatched operator/limit pairs and raises EvaluationError.
double mu_rate(const L1Operator& ln, const QuadratureSpec& spec = {});

/// The quantitative bound attached to mu_rate:
///     ||L_n(f) L(e0) - L_n(e0) L(f)||_1
///         <= (Int_0^1 L_n(e0) L(e0) + 1) * omega(f, mu).
struct MuBoundReport {
  double mu = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};
MuBoundReport mu_bound_report(const L1Operator& ln, const RealFunction& f,
                              const QuadratureSpec& spec = {});

/// The characteristic-function condition: for g the indicator of g_interval,
/// the sequence  ||(L_n - L + I)(g)||_1  over the requested orders, which must
/// settle at or below ||g||_1 (within slack 0.02) for convergence to hold.
struct CharacteristicReport {
  double g_norm = 0.0;
  std::vector<int> orders;
  std::vector<double> residues;
  bool final_within_bound = false;
};
CharacteristicReport characteristic_condition_check(
    const std::function<L1Operator(int)>& ln_family, const L1Operator& l,
    const Interval& g_interval, const std::vector<int>& orders,
    const QuadratureSpec& spec = {});

}  // namespace grunwald
