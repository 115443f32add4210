#include "core/l1.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace grunwald {

double l1_norm(const std::function<double(double)>& f, const Interval& I,
               const QuadratureSpec& spec) {
  I.require_nonempty("l1_norm");
  return integrate([&f](double x) { return std::fabs(f(x)); }, I.lo, I.hi,
                   spec);
}

double l1_distance(const std::function<double(double)>& f,
                   const std::function<double(double)>& g, const Interval& I,
                   const QuadratureSpec& spec) {
  I.require_nonempty("l1_distance");
  return integrate([&f, &g](double x) { return std::fabs(f(x) - g(x)); },
                   I.lo, I.hi, spec);
}

double l1_norm_piecewise(const std::function<double(double)>& f,
                         const Interval& I,
                         const std::vector<double>& breakpoints,
                         const QuadratureSpec& spec) {
  I.require_nonempty("l1_norm_piecewise");
  std::vector<double> cuts{I.lo, I.hi};
  for (double b : breakpoints) {
    if (b > I.lo && b < I.hi) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (!(b > a)) continue;
    // The integrand may jump exactly at the cuts, so sample one-sided limits
    // there: pull quadrature nodes a hair inside the open piece.  Each piece
    // is smooth in its interior by the breakpoint contract.
    const double inset = (b - a) * 1e-12;
    total += integrate(
        [&f, a, b, inset](double x) {
          if (x <= a) x = a + inset;
          else if (x >= b) x = b - inset;
          return std::fabs(f(x));
        },
        a, b, spec);
  }
  return total;
}

}  // namespace grunwald
