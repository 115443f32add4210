#pragma once

#include "core/errors.hpp"

namespace grunwald {

/// Closed interval [lo, hi] on the real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return x >= lo && x <= hi; }

  /// Clamp x into the interval.
  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }

  /// Throws InvalidArgumentError unless lo < hi (strictly).
  void require_nonempty(const char* who) const {
    if (!(lo < hi)) {
      throw InvalidArgumentError(std::string(who) +
                                 ": interval must satisfy lo < hi");
    }
  }
};

}  // namespace grunwald
